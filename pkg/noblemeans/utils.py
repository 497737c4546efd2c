# -*- coding: utf-8 -*-
"""
noblemeans.utils
----------------

This module contains useful classes and functions for the noblemeans package.
"""

__all__ = ['Status']

import sys

from colorama import init, deinit, Fore


class Status(object):
    """Print colored one-line status messages on stderr."""

    COLORS = {
        'success': Fore.GREEN,
        'warning': Fore.YELLOW,
        'error': Fore.RED
    }

    def __init__(self, stream=None):

        self.stream = stream if stream is not None else sys.stderr

    def format_message(self, level: str, msg: str) -> str:
        """Build the colored line. Ex: '[error] ...' in red."""

        color = self.COLORS.get(level, Fore.RESET)

        return '{color}[{level}] {msg}{reset}'.format(color=color, level=level, msg=msg, reset=Fore.RESET)

    def print_status(self, level: str, msg: str):
        """Print a message with the color of its level."""

        init()  # Start colorama

        print(self.format_message(level, msg), file=self.stream)

        deinit()  # Stop colorama

    @staticmethod
    def run(level: str, msg: str, stream=None):
        """Run Status without instantiating an object."""

        Status(stream).print_status(level, msg)
