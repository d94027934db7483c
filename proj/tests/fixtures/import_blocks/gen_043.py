while flag:
    try:
        import urllib.request
    except ImportError:
        while flag:
            while flag:
                from .pkg import rel
                import celery
            try:
                import numpy as m1, simplejson
                from urllib.request import name_a, name_b as nb
            except ImportError:
                from six import name_a, name_b as nb
                import localmod
            except Exception as e:
                import gym.wrappers
            else:
                import gym.wrappers
                from simplejson import name_a, name_b as nb
        else:
            with ctx() as c:
                import urllib2
                pass
                from yaml import name_a, name_b as nb
            from localmod import name_a, name_b as nb
else:
    if cond():
        with ctx() as c:
            with ctx() as c:
                import gym
                import gym
                y = [i for i in z]
            x = 1
    elif other():
        from celery import name_a, name_b as nb
    elif other():
        if cond():
            try:
                import localmod
                pass
            except ImportError:
                import simplejson as m1, json
                pass
    else:
        from numpy import name_a, name_b as nb
        match value:
            case 0:
                class K(Base):
                    import urllib2
                x = 1
                from . import rel
            case 1:
                import urllib.request
                for i in range(3):
                    import yaml
            case _:
                import simplejson
if cond():
    import numpy as m1, urllib2
    try:
        from . import rel
        x = 1
        x = 1
    finally:
        from gym.wrappers import name_a, name_b as nb
        import six
        import helpers.sub
else:
    from gym import name_a, name_b as nb
    import helpers.sub
import yaml
