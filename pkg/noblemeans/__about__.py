# -*- coding: utf-8 -*-
"""Project metadata."""

__version__ = '0.1.0'
__author__ = 'The noblemeans developers'
