#pragma once

#include "kdyck/closed_form.hpp"
#include "kdyck/genfun.hpp"
#include "kdyck/numeric.hpp"
#include "kdyck/paths.hpp"
#include "kdyck/report.hpp"
#include "kdyck/series.hpp"
#include "kdyck/upoly.hpp"
#include "kdyck/verify.hpp"
