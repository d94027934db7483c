try:
    try:
        if cond():
            from simplejson import name_a, name_b as nb
            import six
        else:
            match value:
                case 0:
                    from simplejson import name_a, name_b as nb
                case 1:
                    x = 1
                case _:
                    import urllib2
                    f(x)
                    x = 1
    except ImportError:
        while flag:
            while flag:
                pass
            else:
                from . import rel
                from simplejson import name_a, name_b as nb
            try:
                y = [i for i in z]
            except ImportError:
                f(x)
            finally:
                y = [i for i in z]
                from gym.wrappers import name_a, name_b as nb
                from json import name_a, name_b as nb
            while flag:
                import six
                import gym
                x = 1
        for i in range(3):
            def fn(a, b=2):
                y = [i for i in z]
            class K(Base):
                from urllib2 import name_a, name_b as nb
            import helpers.sub
finally:
    try:
        with ctx() as c:
            if cond():
                import celery
                pass
                from .pkg import rel
            elif other():
                import celery
                import urllib.request
            else:
                import gym as m1, gym.wrappers
                import gym.wrappers
                x = 1
            match value:
                case 0:
                    import celery
    except ImportError:
        if cond():
            for i in range(3):
                y = [i for i in z]
                import gym.wrappers
                import urllib2
            import six as m1, numpy
            from urllib2 import name_a, name_b as nb
        elif other():
            try:
                x = 1
            finally:
                import gym.wrappers as m1, torch
                pass
    except Exception as e:
        with ctx() as c:
            from torch import name_a, name_b as nb
        y = [i for i in z]
        y = [i for i in z]
    from .pkg import rel
    from ujson import name_a, name_b as nb
from simplejson import name_a, name_b as nb
