try:
    y = [i for i in z]
    if cond():
        import simplejson
    elif other():
        for i in range(3):
            pass
            match value:
                case 0:
                    import torch
                    from . import rel
                    import urllib2
            import yaml as m1, urllib2
        class K(Base):
            with ctx() as c:
                import yaml
                import localmod as m1, six
        for i in range(3):
            from gym import name_a, name_b as nb
            f(x)
    else:
        while flag:
            if cond():
                from helpers.sub import name_a, name_b as nb
                import urllib2 as m1, ujson
                from localmod import name_a, name_b as nb
            elif other():
                import celery as m1, gym
            else:
                x = 1
                from ujson import name_a, name_b as nb
                import numpy
            from .pkg import rel
        x = 1
except ImportError:
    from urllib.request import name_a, name_b as nb
else:
    class K(Base):
        match value:
            case 0:
                try:
                    x = 1
                    import ujson as m1, urllib2
                except ImportError:
                    pass
                import numpy as m1, helpers.sub
                x = 1
            case 1:
                import urllib.request
                from torch import name_a, name_b as nb
                x = 1
            case _:
                from .pkg import rel
import six as m1, yaml
from . import rel
from celery import name_a, name_b as nb
import json
