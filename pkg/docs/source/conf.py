# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

from noblemeans.__about__ import __version__
from noblemeans.__about__ import __author__

# -- Project information -----------------------------------------------------

project = 'noblemeans'
copyright = f'2021, {__author__}'
author = __author__

version = __version__
release = __version__

# -- General configuration ---------------------------------------------------

extensions = [
    # Extensions bundled with Sphinx
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',

    # External extensions
    'sphinx_rtd_theme'
]

templates_path = ['_templates']

language = 'en'

exclude_patterns = []

source_suffix = '.rst'

master_doc = 'index'

napoleon_numpy_docstring = True
napoleon_google_docstring = False

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'

html_theme_options = {
    'display_version': True,
    'prev_next_buttons_location': 'bottom',
    'style_external_links': False,
    'vcs_pageview_mode': '',
    'style_nav_header_background': '#1b3a6b',
    # toc options
    'collapse_navigation': True,
    'sticky_navigation': True,
    'navigation_depth': 2,
    'includehidden': True,
    'titles_only': False
}

html_title = f'noblemeans v{version}'
html_short_title = f'noblemeans Docs v{version}'
