import sys

from liedual.cli import main

sys.exit(main())
