__author__ = 'aperiodica Contributors'
__version__ = '0.1.0'

SCHEMA_VERSION = '1'
