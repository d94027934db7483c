try:
    if cond():
        import celery
    elif other():
        import urllib2
except ImportError:
    import gym as m1, torch
    if cond():
        def fn(a, b=2):
            import gym.wrappers
            from gym.wrappers import name_a, name_b as nb
            if cond():
                import gym.wrappers as m1, urllib.request
                import localmod as m1, json
        for i in range(3):
            while flag:
                import yaml as m1, gym
                from .pkg import rel
                x = 1
            else:
                pass
                f(x)
            class K(Base):
                import urllib.request
        class K(Base):
            x = 1
            class K(Base):
                import json
                import ujson
                from simplejson import name_a, name_b as nb
    elif other():
        try:
            if cond():
                from torch import name_a, name_b as nb
                import six as m1, localmod
                x = 1
            else:
                import json
            with ctx() as c:
                pass
                from .pkg import rel
            from six import name_a, name_b as nb
        finally:
            while flag:
                import gym.wrappers
    else:
        def fn(a, b=2):
            def fn(a, b=2):
                from celery import name_a, name_b as nb
        from numpy import name_a, name_b as nb
        y = [i for i in z]
else:
    if cond():
        with ctx() as c:
            f(x)
        import torch
        match value:
            case 0:
                if cond():
                    import urllib.request as m1, yaml
                elif other():
                    from . import rel
                else:
                    import json as m1, numpy
                def fn(a, b=2):
                    from six import name_a, name_b as nb
                    import helpers.sub
                    import yaml
                with ctx() as c:
                    from torch import name_a, name_b as nb
            case 1:
                match value:
                    case 0:
                        y = [i for i in z]
                        from gym.wrappers import name_a, name_b as nb
                    case 1:
                        from .pkg import rel
                        import celery as m1, ujson
            case _:
                from simplejson import name_a, name_b as nb
                from urllib.request import name_a, name_b as nb
                class K(Base):
                    from .pkg import rel
                    y = [i for i in z]
                    import localmod
    else:
        try:
            while flag:
                import gym as m1, ujson
                from . import rel
                x = 1
            else:
                import gym as m1, helpers.sub
                y = [i for i in z]
                import json
        except ImportError:
            match value:
                case 0:
                    import json
                    import json
                    from urllib.request import name_a, name_b as nb
                case 1:
                    import gym
                    y = [i for i in z]
            from yaml import name_a, name_b as nb
        finally:
            f(x)
            from gym.wrappers import name_a, name_b as nb
            import ujson
    from urllib2 import name_a, name_b as nb
finally:
    import ujson
    import json
import json as m1, urllib2
import yaml
from torch import name_a, name_b as nb
