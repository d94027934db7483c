import zipp
