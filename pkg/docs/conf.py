# Configuration file for the Sphinx documentation builder.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from hopf_kernels.__about__ import __title__, __version__  # isort: skip

project = __title__
copyright = '2026, the hopf-kernels developers'
author = 'the hopf-kernels developers'
version = __version__
release = __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]
autodoc_member_order = 'bysource'

exclude_patterns = ['_build']
html_theme = 'sphinx_rtd_theme'
master_doc = 'index'


def run_apidoc(_):
    from sphinx.ext import apidoc
    apidoc.main([
        '--force',
        '--separate',
        '--module-first',
        '--output-dir',
        os.path.dirname(os.path.abspath(__file__)),
        os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'hopf_kernels'),
    ])


def setup(app):
    app.connect('builder-inited', run_apidoc)
