#pragma once

#include "wph/agecalc.hpp"
#include "wph/classify.hpp"
#include "wph/ehrhart.hpp"
#include "wph/error.hpp"
#include "wph/hyperg.hpp"
#include "wph/numeric.hpp"
#include "wph/report.hpp"
#include "wph/smith.hpp"
#include "wph/toric.hpp"
#include "wph/verify.hpp"
