import six
for i in range(3):
    if cond():
        try:
            from helpers.sub import name_a, name_b as nb
        except ImportError:
            with ctx() as c:
                from urllib2 import name_a, name_b as nb
                import gym.wrappers
            pass
            y = [i for i in z]
        except Exception as e:
            import urllib.request
        else:
            for i in range(3):
                x = 1
                from . import rel
                from localmod import name_a, name_b as nb
            import celery
            pass
        match value:
            case 0:
                match value:
                    case 0:
                        x = 1
                for i in range(3):
                    from yaml import name_a, name_b as nb
        if cond():
            import localmod
            from gym import name_a, name_b as nb
            while flag:
                y = [i for i in z]
        else:
            import json
            match value:
                case 0:
                    from gym.wrappers import name_a, name_b as nb
                    import gym
                case 1:
                    from helpers.sub import name_a, name_b as nb
                case _:
                    y = [i for i in z]
    elif other():
        try:
            try:
                from .pkg import rel
                from urllib.request import name_a, name_b as nb
            except ImportError:
                import urllib2
                from .pkg import rel
                import json
        except ImportError:
            try:
                from . import rel
                pass
            except ImportError:
                import numpy
                import urllib.request as m1, numpy
            x = 1
            import numpy
        except Exception as e:
            from simplejson import name_a, name_b as nb
            from .pkg import rel
        finally:
            pass
            pass
            import urllib2
        import six
    else:
        import localmod
    import numpy
from . import rel
