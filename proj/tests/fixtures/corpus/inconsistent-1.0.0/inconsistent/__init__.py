import jtskit
