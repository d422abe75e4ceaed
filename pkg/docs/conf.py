# -*- coding: utf-8 -*-
#
# aperiodica documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

import aperiodica   # for __version__  # noqa

# {{{General
extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.coverage',
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'aperiodica'
copyright = u'2020, aperiodica Contributors'
author = u'aperiodica Contributors'

version = aperiodica.__version__
release = version

language = None
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False
# }}}

# {{{HTML
html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'aperiodicadoc'
# }}}

# {{{Other formats
latex_documents = [
    (master_doc, 'aperiodica.tex', u'aperiodica Documentation',
     u'aperiodica', 'manual'),
]

man_pages = [
    (master_doc, 'aperiodica', u'aperiodica Documentation',
     [author], 1)
]
# }}}

intersphinx_mapping = {
    'https://docs.python.org/': None,
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}
