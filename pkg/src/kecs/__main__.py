import sys

from kecs.cli import main

sys.exit(main())
