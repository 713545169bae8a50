"""
Puts the working tree's src directory first on the import path so the tests run against the local doxa
package rather than an installed one.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.getcwd(), "src"))
