try:
    match value:
        case 0:
            import six
        case 1:
            f(x)
            if cond():
                try:
                    from ujson import name_a, name_b as nb
                    pass
                    import simplejson
                except ImportError:
                    from json import name_a, name_b as nb
                    import helpers.sub
                    from torch import name_a, name_b as nb
                else:
                    from .pkg import rel
                    from urllib2 import name_a, name_b as nb
                    from ujson import name_a, name_b as nb
                import gym as m1, six
    match value:
        case 0:
            from urllib.request import name_a, name_b as nb
except ImportError:
    match value:
        case 0:
            while flag:
                match value:
                    case 0:
                        import ujson
                        import simplejson
                        from torch import name_a, name_b as nb
                    case 1:
                        y = [i for i in z]
                if cond():
                    import six as m1, urllib.request
                    import simplejson as m1, numpy
                    from gym import name_a, name_b as nb
                else:
                    pass
                    y = [i for i in z]
            x = 1
        case 1:
            if cond():
                from gym import name_a, name_b as nb
                import gym.wrappers as m1, gym
    match value:
        case 0:
            with ctx() as c:
                pass
                from numpy import name_a, name_b as nb
                with ctx() as c:
                    import urllib.request
                    import celery
                    from .pkg import rel
            import ujson
            try:
                while flag:
                    import gym.wrappers as m1, localmod
                    from urllib.request import name_a, name_b as nb
                    y = [i for i in z]
            except ImportError:
                from urllib2 import name_a, name_b as nb
            else:
                import localmod
                match value:
                    case 0:
                        from gym import name_a, name_b as nb
                        from six import name_a, name_b as nb
                        from urllib2 import name_a, name_b as nb
                    case 1:
                        import simplejson
                        from six import name_a, name_b as nb
                    case _:
                        from . import rel
            finally:
                with ctx() as c:
                    import torch as m1, gym.wrappers
                    from six import name_a, name_b as nb
                from torch import name_a, name_b as nb
                import gym
