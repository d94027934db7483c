try:
    from gym import name_a, name_b as nb
    import localmod
except ImportError:
    import six
