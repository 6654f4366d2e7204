#    Integer coefficient selection for compute-and-forward relaying via
#    quadratic programming relaxation.
#
#    Copyright (C) 2026 The cfqpr developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
import sys

from .bench.cli import main

if __name__ == "__main__":
    sys.exit(main())
