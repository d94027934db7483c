try:
    for i in range(3):
        import urllib.request
        for i in range(3):
            try:
                f(x)
            except ImportError:
                import six
            except Exception as e:
                import simplejson
                pass
            else:
                import helpers.sub
                from torch import name_a, name_b as nb
except ImportError:
    import json
    import six
except Exception as e:
    import urllib.request
else:
    import numpy as m1, celery
    pass
    x = 1
finally:
    x = 1
import gym.wrappers
import gym
