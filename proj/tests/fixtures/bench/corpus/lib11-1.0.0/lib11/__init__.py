import urllib3
import idna
