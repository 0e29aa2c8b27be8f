import sys

from opendhondt.cli import main

sys.exit(main())
