import sys

from tropconvex.cli import main

sys.exit(main())
