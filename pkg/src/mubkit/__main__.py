import sys

from mubkit.cli import main

sys.exit(main())
