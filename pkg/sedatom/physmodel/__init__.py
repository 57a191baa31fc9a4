# -*- coding: utf-8 -*-
from .constants import *
from .reference import *
from .config import *
