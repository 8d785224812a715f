"""Main entry point for running the library from the command line."""

##############################################################################
# Python imports.
import sys

##############################################################################
# Local imports.
from .cli import main

##############################################################################
if __name__ == "__main__":
    sys.exit(main())

### __main__.py ends here
