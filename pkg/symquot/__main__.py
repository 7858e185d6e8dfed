import sys

from symquot.main import main

sys.exit(main())
