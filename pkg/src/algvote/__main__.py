import sys

from algvote.cli import main

sys.exit(main())
