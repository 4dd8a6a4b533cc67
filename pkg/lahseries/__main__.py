import sys

from lahseries.main import main

sys.exit(main())
