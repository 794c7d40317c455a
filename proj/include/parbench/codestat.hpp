#pragma once

#include "parbench/codestat/classify.hpp"
#include "parbench/codestat/effort.hpp"
#include "parbench/codestat/json_io.hpp"
#include "parbench/codestat/lexer.hpp"
#include "parbench/codestat/profile.hpp"
#include "parbench/codestat/scan.hpp"
