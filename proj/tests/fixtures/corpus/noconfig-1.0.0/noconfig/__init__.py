import json

VALUE = json.dumps({})
