# -*- coding: utf-8 -*-
from .histogram import *
from .observer import *
from .io import *
from .campaign import *
