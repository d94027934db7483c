class K(Base):
    import urllib.request as m1, gym
    import celery
    for i in range(3):
        import localmod
        try:
            for i in range(3):
                import numpy
                from . import rel
                import localmod
            import yaml
            for i in range(3):
                from urllib.request import name_a, name_b as nb
        except ImportError:
            from ujson import name_a, name_b as nb
            from localmod import name_a, name_b as nb
        else:
            import celery
            match value:
                case 0:
                    import localmod as m1, urllib.request
match value:
    case 0:
        import urllib.request
    case 1:
        x = 1
        from helpers.sub import name_a, name_b as nb
