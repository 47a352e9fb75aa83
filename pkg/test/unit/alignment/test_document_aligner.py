from prepocr.alignment import document_aligner, edit_distance
from prepocr.alignment.text_normalization import normalize_text
from prepocr.exceptions import ConfigError
from prepocr.models.config.alignment_config_model import AlignmentConfigModel
from prepocr.test_utils import helpers
from prepocr.test_utils.abstract_test_case import AbstractTestCase

GT = normalize_text(helpers.SAMPLE_CORPUS)


class DocumentAlignerTest(AbstractTestCase):

    def test_identical_texts(self):
        for anchor_n in (1, 2, 4, 6):
            alignment = document_aligner.align_document(GT, GT, AlignmentConfigModel(anchor_n=anchor_n))
            self.assertEqual(1, len(alignment.segments))
            self.assertEqual([], alignment.unmatched)
            self.assertEqual(0, alignment.cost())
            segment = alignment.segments[0]
            self.assertEqual((0, len(GT), 0, len(GT)), (segment.gt_start, segment.gt_end, segment.hyp_start,
                                                        segment.hyp_end))

    def test_prepended_header_is_unmatched(self):
        header = "THE CROWN EDITION PAGE XVII "
        hyp = header + GT
        alignment = document_aligner.align_document(GT, hyp)
        self.assertEqual([(0, len(header))], alignment.unmatched)
        self.assertEqual(0, alignment.cost())
        self.assertEqual(edit_distance.align_exact(GT, GT).ops, alignment.segments[0].script.ops)

    def test_interior_insertion_without_counterpart(self):
        split = GT.index("There were a king")
        footer = "Printed by Chapman and Hall, London 1859"
        hyp = GT[:split] + footer + " " + GT[split:]
        alignment = document_aligner.align_document(GT, hyp)
        self.assertEqual(2, len(alignment.segments))
        self.assertEqual(1, len(alignment.unmatched))
        start, end = alignment.unmatched[0]
        self.assertIn(footer, hyp[start:end])
        self.assertEqual(0, alignment.cost())

    def test_local_edits_cost_matches_whole_text(self):
        chars = list(GT)
        for position in range(7, len(chars), 97):
            chars[position] = "#" if chars[position] != "#" else "%"
        hyp = "".join(chars)
        alignment = document_aligner.align_document(GT, hyp)
        self.assertEqual([], alignment.unmatched)
        self.assertEqual(edit_distance.edit_distance(GT, hyp), alignment.cost())
        for segment in alignment.segments:
            self.assertEqual(hyp[segment.hyp_start:segment.hyp_end], segment.script.replay(
                GT[segment.gt_start:segment.gt_end]))

    def test_noisy_edge_text_is_kept(self):
        hyp = GT.replace("It was the best", "Jt wns the best", 1).replace("for ever.", "for evcr.")
        alignment = document_aligner.align_document(GT, hyp)
        self.assertEqual([], alignment.unmatched)
        self.assertEqual(3, alignment.cost())

    def test_page_inside_book(self):
        start = GT.index("In short")
        end = GT.index("There were")
        page = GT[start:end].strip()
        alignment = document_aligner.align_document(GT, page)
        self.assertEqual([], alignment.unmatched)
        self.assertEqual(0, alignment.cost())
        self.assertEqual(len(page), alignment.matched_gt_length())

    def test_no_anchors_beyond_fallback_cap(self):
        config = AlignmentConfigModel(fallback_cap=10)
        alignment = document_aligner.align_document("alpha beta gamma delta", "one two three four five", config)
        self.assertEqual([], alignment.segments)
        self.assertEqual([(0, 23)], alignment.unmatched)

    def test_no_anchors_within_fallback_cap(self):
        alignment = document_aligner.align_document("the cat", "tbe cot")
        self.assertEqual(1, len(alignment.segments))
        self.assertEqual(2, alignment.cost())

    def test_empty_sides(self):
        self.assertEqual([], document_aligner.align_document(GT, "").segments)
        self.assertEqual([(0, 3)], document_aligner.align_document("", "abc").unmatched)

    def test_invalid_anchor_n(self):
        with self.assertRaises(ConfigError):
            document_aligner.align_document("a", "a", AlignmentConfigModel(anchor_n=0))

    def test_longest_increasing_chain(self):
        anchors = [(0, 5), (1, 1), (2, 2), (3, 9), (4, 3), (5, 4)]
        self.assertEqual([(1, 1), (2, 2), (4, 3), (5, 4)], document_aligner.longest_increasing_chain(anchors))
        self.assertEqual([], document_aligner.longest_increasing_chain([]))

    def test_merge_anchors(self):
        blocks = document_aligner.merge_anchors([(0, 0), (1, 1), (2, 2), (4, 5), (10, 12)], 4)
        self.assertEqual([(0, 0, 6), (6, 7, 2), (10, 12, 4)],
                         [(block.gt_first, block.hyp_first, block.length) for block in blocks])
