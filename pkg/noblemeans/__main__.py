# -*- coding: utf-8 -*-
"""Run the noblemeans command line with ``python -m noblemeans``."""

import sys

from noblemeans.cli import main


if __name__ == '__main__':
    sys.exit(main())
