# -*- coding: utf-8 -*-
#
# harmony documentation build configuration file.

import os
import sys

import alabaster

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'alabaster',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'harmony'
copyright = '2026, harmony developers'
author = 'harmony developers'

# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join(os.path.dirname(__file__), '..',
                       'harmony', 'version.py'),
          'rt') as fp:
    exec(fp.read(), g)
    version = g['__version__']
release = version

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Exact harmonic-like numbers and their identities',
    'logo_text_align': 'left',
}
html_theme_path = [alabaster.get_path()]
htmlhelp_basename = 'harmonydoc'

latex_documents = [
    (master_doc, 'harmony.tex', 'harmony Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'harmony', 'harmony Documentation', [author], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
