# -*- coding: utf-8 -*-
from .state import *
from .forces import *
from .equation import *
