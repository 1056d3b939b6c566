import sys

from siltinglib.cli import main

sys.exit(main())
