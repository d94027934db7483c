try:
    import yaml
    for i in range(3):
        x = 1
        with ctx() as c:
            import gym.wrappers as m1, celery
            if cond():
                from torch import name_a, name_b as nb
                from . import rel
                pass
            for i in range(3):
                import simplejson
        def fn(a, b=2):
            from . import rel
            try:
                x = 1
            finally:
                from numpy import name_a, name_b as nb
except ImportError:
    import urllib.request as m1, json
    y = [i for i in z]
    if cond():
        if cond():
            while flag:
                import celery
            while flag:
                y = [i for i in z]
                import yaml
            for i in range(3):
                from six import name_a, name_b as nb
                y = [i for i in z]
        try:
            pass
            import six
        finally:
            if cond():
                y = [i for i in z]
                x = 1
        if cond():
            with ctx() as c:
                import urllib2
        else:
            import gym.wrappers
    elif other():
        if cond():
            match value:
                case 0:
                    from localmod import name_a, name_b as nb
                case 1:
                    import urllib.request as m1, gym.wrappers
                    import simplejson as m1, helpers.sub
                    pass
                case _:
                    f(x)
                    import urllib2
            while flag:
                import json
                y = [i for i in z]
                import celery
            else:
                import gym
                f(x)
            if cond():
                pass
            elif other():
                f(x)
                from . import rel
                x = 1
            else:
                f(x)
                from .pkg import rel
                import yaml
    elif other():
        class K(Base):
            match value:
                case 0:
                    from urllib.request import name_a, name_b as nb
                    f(x)
                    import torch
                case 1:
                    from .pkg import rel
                    import urllib2 as m1, gym.wrappers
                case _:
                    import simplejson
            try:
                from gym.wrappers import name_a, name_b as nb
                import urllib2
                pass
            except ImportError:
                from .pkg import rel
                from yaml import name_a, name_b as nb
            try:
                import urllib2
                from torch import name_a, name_b as nb
            except ImportError:
                import localmod
                pass
            finally:
                y = [i for i in z]
                x = 1
                import six
        try:
            def fn(a, b=2):
                import yaml as m1, yaml
        finally:
            if cond():
                import urllib2
                x = 1
            else:
                y = [i for i in z]
                y = [i for i in z]
            if cond():
                from .pkg import rel
            else:
                import yaml as m1, gym
                import numpy
                import six
        pass
import json as m1, localmod
from urllib.request import name_a, name_b as nb
import helpers.sub
from . import rel
