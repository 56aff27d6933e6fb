import sys

from zbeta.cli import main

sys.exit(main())
