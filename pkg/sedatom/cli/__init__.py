# -*- coding: utf-8 -*-
from .main import *
from .bench import *
