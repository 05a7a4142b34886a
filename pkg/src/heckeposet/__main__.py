import sys

from heckeposet.cli import main

sys.exit(main())
