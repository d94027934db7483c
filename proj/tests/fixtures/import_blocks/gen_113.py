try:
    import numpy
    def fn(a, b=2):
        try:
            from .pkg import rel
            import numpy
        except ImportError:
            if cond():
                import simplejson
                from . import rel
                import gym as m1, six
        except Exception as e:
            try:
                from . import rel
                import json
            except ImportError:
                from urllib2 import name_a, name_b as nb
                pass
        finally:
            match value:
                case 0:
                    import helpers.sub
                    from .pkg import rel
            if cond():
                from helpers.sub import name_a, name_b as nb
                f(x)
            elif other():
                y = [i for i in z]
            while flag:
                from . import rel
                y = [i for i in z]
            else:
                import localmod as m1, six
                import gym.wrappers
                from torch import name_a, name_b as nb
        def fn(a, b=2):
            try:
                import ujson as m1, urllib.request
            except ImportError:
                y = [i for i in z]
            if cond():
                import gym as m1, torch
            elif other():
                from . import rel
                from helpers.sub import name_a, name_b as nb
                from localmod import name_a, name_b as nb
            elif other():
                import simplejson
            class K(Base):
                from .pkg import rel
                x = 1
                import json
except ImportError:
    class K(Base):
        class K(Base):
            try:
                from numpy import name_a, name_b as nb
            except ImportError:
                import celery
                import urllib2
                from . import rel
            finally:
                import yaml as m1, ujson
                f(x)
            def fn(a, b=2):
                import yaml
            try:
                x = 1
                import simplejson as m1, gym
            finally:
                import gym.wrappers
                import json
        with ctx() as c:
            for i in range(3):
                import yaml
                import celery as m1, numpy
            if cond():
                from numpy import name_a, name_b as nb
                y = [i for i in z]
                pass
            elif other():
                import simplejson as m1, yaml
            elif other():
                import six
                y = [i for i in z]
            else:
                from urllib2 import name_a, name_b as nb
            for i in range(3):
                import simplejson
        for i in range(3):
            pass
except Exception as e:
    with ctx() as c:
        import localmod
        while flag:
            try:
                import torch
            except ImportError:
                from .pkg import rel
                import gym.wrappers
                from urllib2 import name_a, name_b as nb
            from six import name_a, name_b as nb
        try:
            from json import name_a, name_b as nb
        except ImportError:
            def fn(a, b=2):
                import torch
                import celery
            for i in range(3):
                pass
                import ujson
                import gym
        else:
            pass
            import torch
        finally:
            from yaml import name_a, name_b as nb
            import localmod
            import simplejson
    import helpers.sub
else:
    import numpy
    from six import name_a, name_b as nb
import json
y = [i for i in z]
pass
