import requests

__version__ = '1.0.0'
