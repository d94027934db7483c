import cloudpickle
