try:
    match value:
        case 0:
            if cond():
                f(x)
                while flag:
                    import helpers.sub
                else:
                    y = [i for i in z]
            else:
                try:
                    import json
                except ImportError:
                    import gym
                    from simplejson import name_a, name_b as nb
                except Exception as e:
                    import json
                    import yaml
                while flag:
                    import urllib.request
                    import helpers.sub
                else:
                    import numpy as m1, helpers.sub
                    import ujson as m1, helpers.sub
                class K(Base):
                    import numpy
                    import localmod
                    from .pkg import rel
            try:
                if cond():
                    import ujson as m1, gym
                    import json
                elif other():
                    pass
                    import six
                    import yaml
                else:
                    from torch import name_a, name_b as nb
                class K(Base):
                    from gym import name_a, name_b as nb
                    import celery as m1, json
                    from . import rel
                import six as m1, urllib.request
            except ImportError:
                if cond():
                    import six
                elif other():
                    import gym.wrappers
                    import yaml as m1, yaml
                    from gym.wrappers import name_a, name_b as nb
                else:
                    import yaml
                import numpy
                while flag:
                    import gym
                    import urllib2
                    import numpy
            else:
                import six
            finally:
                for i in range(3):
                    from gym.wrappers import name_a, name_b as nb
                while flag:
                    pass
                    from localmod import name_a, name_b as nb
                    f(x)
                else:
                    pass
                    x = 1
                    from six import name_a, name_b as nb
    from celery import name_a, name_b as nb
    from .pkg import rel
finally:
    f(x)
    import six as m1, simplejson
    from numpy import name_a, name_b as nb
from .pkg import rel
