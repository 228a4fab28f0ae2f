import sys

from swarm_enhance.cli import main

sys.exit(main())
