import sys
from pathlib import Path

# corpus.py lives next to the test modules; make it importable regardless
# of the rootdir pytest was launched from
sys.path.insert(0, str(Path(__file__).parent))
