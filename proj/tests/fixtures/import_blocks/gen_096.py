try:
    class K(Base):
        from ujson import name_a, name_b as nb
    x = 1
finally:
    try:
        while flag:
            while flag:
                import helpers.sub
                f(x)
            if cond():
                import yaml as m1, gym
                import json
                x = 1
            elif other():
                from localmod import name_a, name_b as nb
                import json
            try:
                import numpy as m1, torch
                import six
            except ImportError:
                import urllib2
            finally:
                import celery
                import simplejson
        if cond():
            try:
                import gym as m1, celery
                f(x)
            except ImportError:
                import yaml
                import numpy
            except Exception as e:
                y = [i for i in z]
                from . import rel
                pass
            finally:
                import simplejson as m1, gym.wrappers
            import helpers.sub
        else:
            try:
                f(x)
                import celery
            except ImportError:
                x = 1
                from .pkg import rel
    finally:
        from simplejson import name_a, name_b as nb
match value:
    case 0:
        try:
            y = [i for i in z]
            y = [i for i in z]
            from json import name_a, name_b as nb
        finally:
            class K(Base):
                for i in range(3):
                    pass
        from .pkg import rel
    case 1:
        f(x)
        match value:
            case 0:
                match value:
                    case 0:
                        def fn(a, b=2):
                            y = [i for i in z]
                            from simplejson import name_a, name_b as nb
                try:
                    match value:
                        case 0:
                            import ujson
                            import urllib.request as m1, ujson
                        case 1:
                            from .pkg import rel
                        case _:
                            import helpers.sub
                finally:
                    for i in range(3):
                        f(x)
                        import gym.wrappers
                        from localmod import name_a, name_b as nb
                    x = 1
                import urllib2 as m1, helpers.sub
import simplejson as m1, gym
x = 1
y = [i for i in z]
from .pkg import rel
