import six
import celery
