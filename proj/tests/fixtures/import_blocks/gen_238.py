try:
    def fn(a, b=2):
        if cond():
            from celery import name_a, name_b as nb
            with ctx() as c:
                from torch import name_a, name_b as nb
            try:
                pass
            except ImportError:
                import helpers.sub
                import simplejson as m1, json
            finally:
                from .pkg import rel
        else:
            if cond():
                f(x)
            if cond():
                x = 1
                import simplejson
            elif other():
                import localmod
                import json
                import gym.wrappers as m1, urllib.request
            elif other():
                x = 1
                from .pkg import rel
                import gym
            else:
                from celery import name_a, name_b as nb
                import helpers.sub
                import helpers.sub
            while flag:
                pass
            else:
                from helpers.sub import name_a, name_b as nb
                from numpy import name_a, name_b as nb
                from .pkg import rel
        import celery
        y = [i for i in z]
except ImportError:
    import celery
pass
import yaml
pass
f(x)
