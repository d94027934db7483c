def fn(a, b=2):
    match value:
        case 0:
            try:
                for i in range(3):
                    pass
                    f(x)
                    x = 1
            except ImportError:
                def fn(a, b=2):
                    import numpy
                    pass
                    import urllib2
                from . import rel
                x = 1
        case 1:
            x = 1
            class K(Base):
                while flag:
                    import simplejson as m1, gym
                    import yaml
                    import six
                with ctx() as c:
                    from yaml import name_a, name_b as nb
                class K(Base):
                    import json
            from simplejson import name_a, name_b as nb
        case _:
            if cond():
                from . import rel
            else:
                match value:
                    case 0:
                        from .pkg import rel
                    case 1:
                        from celery import name_a, name_b as nb
                        import six
                        from json import name_a, name_b as nb
                    case _:
                        y = [i for i in z]
    x = 1
    import yaml
import six
from gym import name_a, name_b as nb
import gym
import numpy
f(x)
