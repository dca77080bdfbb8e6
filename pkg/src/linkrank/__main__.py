import sys

from linkrank.cli import main

sys.exit(main())
