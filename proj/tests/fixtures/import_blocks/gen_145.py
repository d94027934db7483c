if cond():
    if cond():
        import numpy
    else:
        match value:
            case 0:
                try:
                    from urllib.request import name_a, name_b as nb
                except ImportError:
                    import celery
                    import celery
                    from . import rel
                finally:
                    from celery import name_a, name_b as nb
                    import localmod
                    import celery as m1, numpy
                from json import name_a, name_b as nb
            case 1:
                if cond():
                    x = 1
                    import torch as m1, torch
                else:
                    from json import name_a, name_b as nb
                while flag:
                    from numpy import name_a, name_b as nb
                def fn(a, b=2):
                    from helpers.sub import name_a, name_b as nb
                    import torch
                    import urllib2
            case _:
                def fn(a, b=2):
                    pass
                    import yaml
                for i in range(3):
                    from .pkg import rel
                    import urllib.request
    from celery import name_a, name_b as nb
    if cond():
        def fn(a, b=2):
            class K(Base):
                import urllib.request
                from . import rel
        with ctx() as c:
            if cond():
                import urllib.request
                import helpers.sub
                import ujson
            try:
                from .pkg import rel
                from gym import name_a, name_b as nb
                import helpers.sub
            except ImportError:
                y = [i for i in z]
                import urllib2
            except Exception as e:
                import gym as m1, ujson
        y = [i for i in z]
    elif other():
        import localmod
        def fn(a, b=2):
            import helpers.sub
            import gym as m1, urllib.request
    else:
        for i in range(3):
            try:
                import yaml
                import numpy as m1, numpy
            except ImportError:
                pass
                import gym.wrappers
        match value:
            case 0:
                match value:
                    case 0:
                        from . import rel
                    case 1:
                        from celery import name_a, name_b as nb
                        import localmod
        while flag:
            from urllib2 import name_a, name_b as nb
            x = 1
else:
    import urllib.request
    if cond():
        match value:
            case 0:
                from numpy import name_a, name_b as nb
            case 1:
                if cond():
                    y = [i for i in z]
                    from .pkg import rel
                    from six import name_a, name_b as nb
                else:
                    import yaml
                    import celery
                    import urllib.request
                import ujson
                from urllib.request import name_a, name_b as nb
        match value:
            case 0:
                while flag:
                    pass
                x = 1
                for i in range(3):
                    x = 1
            case 1:
                import urllib.request as m1, urllib.request
                if cond():
                    x = 1
                elif other():
                    x = 1
                    from helpers.sub import name_a, name_b as nb
    elif other():
        def fn(a, b=2):
            import gym.wrappers
            from . import rel
        import localmod
        import gym.wrappers
    else:
        import simplejson
        import gym as m1, yaml
        y = [i for i in z]
    import json as m1, six
import yaml
y = [i for i in z]
