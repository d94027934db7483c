import localmod as m1, simplejson
if cond():
    from localmod import name_a, name_b as nb
elif other():
    for i in range(3):
        from .pkg import rel
    import urllib2
else:
    for i in range(3):
        x = 1
        with ctx() as c:
            for i in range(3):
                from ujson import name_a, name_b as nb
                import simplejson
        x = 1
try:
    import simplejson
    match value:
        case 0:
            try:
                f(x)
            except ImportError:
                match value:
                    case 0:
                        pass
                        import celery as m1, six
                        import simplejson
                    case 1:
                        import numpy
                        from . import rel
                    case _:
                        import six as m1, gym.wrappers
                        import celery as m1, gym
                from ujson import name_a, name_b as nb
                x = 1
            from urllib2 import name_a, name_b as nb
            from . import rel
        case 1:
            pass
            import urllib.request
    import urllib.request
finally:
    import torch as m1, gym
    import torch
x = 1
import gym.wrappers
f(x)
