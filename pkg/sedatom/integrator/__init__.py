# -*- coding: utf-8 -*-
from .integrator import *
from .rungekutta import *
