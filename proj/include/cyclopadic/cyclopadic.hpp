#pragma once

#include "cyclopadic/congruence.hpp"
#include "cyclopadic/congruences.hpp"
#include "cyclopadic/cycle_index.hpp"
#include "cyclopadic/integer.hpp"
#include "cyclopadic/meixner.hpp"
#include "cyclopadic/multipoly.hpp"
#include "cyclopadic/padic.hpp"
#include "cyclopadic/report.hpp"
#include "cyclopadic/series.hpp"
#include "cyclopadic/serialize.hpp"
#include "cyclopadic/sweep.hpp"
#include "cyclopadic/unipoly.hpp"
