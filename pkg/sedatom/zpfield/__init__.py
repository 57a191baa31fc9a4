# -*- coding: utf-8 -*-
from .modes import *
from .amplitudes import *
from .window import *
from .field import *
