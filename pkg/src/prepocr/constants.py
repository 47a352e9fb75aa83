MAX_INTENSITY = 255
WHITE = 255
BLACK = 0

# ITU-R BT.601 luma weights for converting colour scans to grayscale
LUMA_WEIGHTS = (0.299, 0.587, 0.114)

DEFAULT_TEXT_ENCODING = "utf-8"

# <editor-fold desc="Synthesis">
DEFAULT_FONT = "default"
DEFAULT_FONT_SIZE = 28
DEFAULT_WRAP_WIDTH = 64
DEFAULT_LINES_PER_PAGE = 12
DEFAULT_BINARIZE_PROBABILITY = 0.10
DEFAULT_STITCH_FRACTION = 0.10
NOISE_LEVELS = (1, 2, 3, 4)

CLEAN_DIR = "clean"
DEGRADED_DIR = "degraded"
DATASET_MANIFEST_FILE = "manifest.jsonl"
IMAGE_NAME_FORMAT = "{:06d}.png"
# </editor-fold>

# <editor-fold desc="Restoration">
PATCH_SIZE = 256
SUPPORTED_TRIMS = (0, 32, 64)
DEFAULT_TRIM = 64
DEFAULT_RESIZE_WIDTH = 1216
DEFAULT_PATCH_BATCH_SIZE = 16
EXTERNAL_RESTORER_INDEX_FILE = "index.txt"
EXTERNAL_RESTORER_TIMEOUT_S = 3600
EXTERNAL_OCR_TIMEOUT_S = 600
# </editor-fold>

# <editor-fold desc="AMP">
AMP_ZERO_ERROR_DB = 100.0
AMP_REGION_MARGINS = {"full": 0, "central-192": 32, "central-128": 64}
AMP_PATCHES_PER_IMAGE = 2
# </editor-fold>

# <editor-fold desc="Alignment">
OUTLIER_CER_THRESHOLD = 0.25
DEFAULT_ANCHOR_N = 4
DEFAULT_BAND_WIDTH = 256
DEFAULT_BAND_THRESHOLD = 2000
DEFAULT_FALLBACK_CAP = 5000
DEFAULT_EDGE_MAX_CER = 0.5
DEFAULT_MIN_UNMATCHED_CHARS = 16
PAGE_SEPARATOR = "\f"
# </editor-fold>

# <editor-fold desc="OCR noise">
DELETION_PLACEHOLDER = "@"
DEFAULT_MAX_PAIR_LENGTH = 512
DEFAULT_MAX_LAMBDA = 20.0
CALIBRATION_RELATIVE_TOLERANCE = 0.02
CALIBRATION_MAX_ITERATIONS = 40
CALIBRATION_CHUNK_LENGTH = 1000
SENTENCE_TERMINATORS = ".!?"
ERROR_MODEL_FORMAT = "prepocr-error-model"
ERROR_MODEL_VERSION = 1
# </editor-fold>

# <editor-fold desc="Correction">
DEFAULT_LM_ORDER = 5
DEFAULT_LM_K = 0.01
DEFAULT_BEAM_WIDTH = 16
DEFAULT_EDIT_WINDOW = 16
DEFAULT_MAX_EDITS_PER_WINDOW = 4
CHAR_LM_FORMAT = "prepocr-charlm"
CHAR_LM_VERSION = 1
UNKNOWN_SYMBOL = "�"
REFERENCE_CORRECTOR_LABEL = "reference corrector"
# </editor-fold>

# <editor-fold desc="Pipeline">
PIPELINE_CONFIG_VERSION = 1
RUN_MANIFEST_FILE = "run_manifest.json"
RUN_LOG_FILE = "run.log"
REPORT_JSON_FILE = "report.json"
REPORT_TEXT_FILE = "report.txt"
OCR_RESULTS_FILE = "ocr_results.jsonl"
PAGES_DIR = "pages"
STAGE_RAW = "raw"
STAGE_PRE = "pre"
STAGE_PREP = "prep"
PIPELINE_STAGES = (STAGE_RAW, STAGE_PRE, STAGE_PREP)
MOCK_ENGINE_NOTE = "mock OCR engine reads ground truth and ignores pixels; raw and pre CER are equal by construction"
# </editor-fold>

DEFAULT_SEED = 0
DEFAULT_THREAD_POOL_PARALLELISM_DEGREE = 1
STATS_MEMORY_UNIT = 1024 * 1024
