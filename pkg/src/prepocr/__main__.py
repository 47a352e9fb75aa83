import sys

from prepocr import runner

if __name__ == "__main__":
    sys.exit(runner.run())
