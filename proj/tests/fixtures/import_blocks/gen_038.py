def fn(a, b=2):
    match value:
        case 0:
            from . import rel
            import gym
            for i in range(3):
                def fn(a, b=2):
                    x = 1
                try:
                    import simplejson
                    import ujson
                except ImportError:
                    from . import rel
                    import gym as m1, json
                    y = [i for i in z]
                except Exception as e:
                    from six import name_a, name_b as nb
                    import six
                    f(x)
        case 1:
            if cond():
                if cond():
                    from .pkg import rel
                    from numpy import name_a, name_b as nb
                    import localmod
                elif other():
                    from numpy import name_a, name_b as nb
                    x = 1
            f(x)
        case _:
            import urllib.request as m1, urllib.request
            f(x)
            from ujson import name_a, name_b as nb
    from .pkg import rel
    y = [i for i in z]
f(x)
import helpers.sub as m1, urllib.request
import simplejson
