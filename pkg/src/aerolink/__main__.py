import sys

from aerolink.cli import main

sys.exit(main())
