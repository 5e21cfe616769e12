import sys

from nilorbits.cli import main

sys.exit(main())
