import sys
from qsymkit.main import main

sys.exit(main())
