import sys
from steinberg_schur.cli import main

sys.exit(main())
