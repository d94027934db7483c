with ctx() as c:
    try:
        while flag:
            x = 1
        while flag:
            while flag:
                pass
                import torch
                y = [i for i in z]
            else:
                import gym.wrappers as m1, simplejson
                import six as m1, urllib.request
                import helpers.sub
        else:
            for i in range(3):
                f(x)
                from simplejson import name_a, name_b as nb
                from .pkg import rel
            try:
                import urllib2
                import gym.wrappers as m1, localmod
                pass
            finally:
                from json import name_a, name_b as nb
            class K(Base):
                from torch import name_a, name_b as nb
                from gym import name_a, name_b as nb
                y = [i for i in z]
    except ImportError:
        import ujson
        f(x)
    if cond():
        import torch
        import helpers.sub
try:
    try:
        import celery
    except ImportError:
        import gym.wrappers as m1, yaml
except ImportError:
    if cond():
        import ujson
        if cond():
            from . import rel
            if cond():
                import yaml
                import yaml
                import localmod as m1, gym
            else:
                import urllib.request as m1, ujson
                from urllib2 import name_a, name_b as nb
                x = 1
        elif other():
            if cond():
                import numpy
                import yaml as m1, gym.wrappers
            elif other():
                import celery
            elif other():
                import gym
            else:
                from urllib2 import name_a, name_b as nb
            match value:
                case 0:
                    pass
                case 1:
                    from numpy import name_a, name_b as nb
                    x = 1
                    y = [i for i in z]
                case _:
                    import helpers.sub as m1, localmod
        elif other():
            pass
            if cond():
                from .pkg import rel
                from celery import name_a, name_b as nb
    elif other():
        if cond():
            import torch as m1, numpy
        f(x)
    elif other():
        from .pkg import rel
    else:
        for i in range(3):
            if cond():
                f(x)
                from numpy import name_a, name_b as nb
            else:
                y = [i for i in z]
            x = 1
            from urllib.request import name_a, name_b as nb
    import numpy as m1, torch
