import sys

from composition_runs.cli import main

sys.exit(main())
