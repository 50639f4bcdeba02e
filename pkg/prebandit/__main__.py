import sys

from prebandit.cli.main import main

sys.exit(main())
