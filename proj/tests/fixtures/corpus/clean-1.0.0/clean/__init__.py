import os
import six

from .core import run
