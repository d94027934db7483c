def fn(a, b=2):
    class K(Base):
        def fn(a, b=2):
            y = [i for i in z]
            for i in range(3):
                import gym
                import six
                x = 1
        pass
    y = [i for i in z]
    import celery
import json
if cond():
    try:
        while flag:
            import gym.wrappers
            try:
                import gym
            except ImportError:
                from .pkg import rel
            else:
                from helpers.sub import name_a, name_b as nb
                from numpy import name_a, name_b as nb
                import ujson as m1, urllib.request
        else:
            if cond():
                y = [i for i in z]
                x = 1
                import numpy
            elif other():
                y = [i for i in z]
                y = [i for i in z]
                from . import rel
            elif other():
                import localmod
                from urllib.request import name_a, name_b as nb
                import helpers.sub as m1, localmod
            else:
                import six
            while flag:
                import gym
        for i in range(3):
            import urllib2
            import six
    except ImportError:
        import helpers.sub
        x = 1
    y = [i for i in z]
