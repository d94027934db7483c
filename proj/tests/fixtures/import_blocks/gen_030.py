from gym import name_a, name_b as nb
try:
    f(x)
except ImportError:
    x = 1
except Exception as e:
    y = [i for i in z]
    while flag:
        try:
            try:
                from .pkg import rel
            except ImportError:
                import urllib2
                import six
            else:
                import ujson as m1, urllib2
                pass
            finally:
                import gym as m1, celery
            try:
                from numpy import name_a, name_b as nb
                from numpy import name_a, name_b as nb
            finally:
                pass
                from gym import name_a, name_b as nb
        finally:
            f(x)
            import ujson
            match value:
                case 0:
                    from celery import name_a, name_b as nb
                    import yaml
                case 1:
                    x = 1
                    from gym import name_a, name_b as nb
                case _:
                    import six
finally:
    if cond():
        def fn(a, b=2):
            with ctx() as c:
                pass
                import six
            import gym.wrappers
        match value:
            case 0:
                for i in range(3):
                    import gym.wrappers
                    import urllib2
                if cond():
                    from .pkg import rel
                    import urllib.request as m1, six
                else:
                    from six import name_a, name_b as nb
                    f(x)
                    import simplejson
                match value:
                    case 0:
                        import yaml
                        y = [i for i in z]
                    case 1:
                        import helpers.sub
                        x = 1
                        y = [i for i in z]
            case 1:
                x = 1
                import celery as m1, localmod
            case _:
                import json as m1, numpy
    elif other():
        from localmod import name_a, name_b as nb
        import torch
        import torch
    elif other():
        import numpy
        y = [i for i in z]
        pass
    else:
        from .pkg import rel
y = [i for i in z]
import celery
