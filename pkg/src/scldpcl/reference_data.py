"""Frozen reference values for the regression suite.

Transfer-curve samples, success-probability curves, and the two
design-search tables used by the ``reproduce`` command.  Values are
stored exactly as published; see the README for the known transfer-curve
discrepancy documented for the fig5 artifact."""

TRANSFER_CURVES = {
    0.18: (
    (0.0, 0.0),
    (0.01, 0.0),
    (0.02, 0.0),
    (0.03, 0.0),
    (0.04, 0.0),
    (0.05, 0.0),
    (0.06, 0.0),
    (0.07, 0.0),
    (0.08, 0.0),
    (0.09, 0.0),
    (0.1, 0.0),
    (0.11, 0.0),
    (0.12, 0.0),
    (0.13, 0.0),
    (0.14, 0.0),
    (0.15, 0.0),
    (0.16, 0.0),
    (0.17, 0.0),
    (0.18, 0.0),
    (0.19, 0.0),
    (0.2, 0.0),
    (0.21, 0.0),
    (0.22, 0.0),
    (0.23, 0.0),
    (0.24, 0.0),
    (0.25, 0.0),
    (0.26, 0.0),
    (0.27, 0.0),
    (0.28, 0.0),
    (0.29, 0.0),
    (0.3, 0.0),
    (0.31, 0.0),
    (0.32, 0.0),
    (0.33, 0.0),
    (0.34, 0.0),
    (0.35, 0.0),
    (0.36, 0.0),
    (0.37, 0.0),
    (0.38, 0.0),
    (0.39, 0.0),
    (0.4, 0.0),
    (0.41, 0.0),
    (0.42, 0.0),
    (0.43, 0.0),
    (0.44, 0.0),
    (0.45, 0.0),
    (0.46, 0.0),
    (0.47, 0.0),
    (0.48, 0.0),
    (0.49, 0.0),
    (0.5, 0.0),
    (0.51, 0.0),
    (0.52, 0.0),
    (0.53, 0.0),
    (0.54, 0.0),
    (0.55, 0.0),
    (0.56, 0.0),
    (0.57, 0.0),
    (0.58, 0.0),
    (0.59, 0.0),
    (0.6, 0.0),
    (0.61, 0.0),
    (0.62, 0.0),
    (0.63, 0.0),
    (0.64, 0.0),
    (0.65, 0.0),
    (0.66, 0.0),
    (0.67, 0.0),
    (0.68, 0.0),
    (0.69, 0.0),
    (0.7, 0.0),
    (0.71, 0.0),
    (0.72, 0.0),
    (0.73, 0.0),
    (0.74, 0.0),
    (0.75, 0.0),
    (0.76, 0.0),
    (0.77, 0.0),
    (0.78, 0.0),
    (0.79, 0.0),
    (0.8, 0.0),
    (0.81, 0.0),
    (0.82, 0.0),
    (0.83, 0.0),
    (0.84, 0.0),
    (0.85, 0.0),
    (0.86, 0.0),
    (0.87, 0.0),
    (0.88, 0.0),
    (0.89, 0.0),
    (0.9, 0.0),
    (0.91, 0.0),
    (0.92, 0.0),
    (0.93, 0.0),
    (0.94, 0.0),
    (0.95, 0.0),
    (0.96, 0.0),
    (0.97, 0.0),
    (0.98, 0.0),
    (0.99, 0.0),
    (1.0, 0.0),
),
    0.3547: (
    (0.0, 0.0),
    (0.01, 6.66133814775094e-16),
    (0.02, 1.33226762955019e-15),
    (0.03, 2.33146835171283e-15),
    (0.04, 2.66453525910038e-15),
    (0.05, 3.99680288865056e-15),
    (0.06, 3.99680288865056e-15),
    (0.07, 5.32907051820075e-15),
    (0.08, 5.99520433297585e-15),
    (0.09, 6.32827124036339e-15),
    (0.1, 6.99440505513849e-15),
    (0.11, 8.65973959207622e-15),
    (0.12, 9.99200722162641e-15),
    (0.13, 9.65894031423886e-15),
    (0.14, 9.99200722162641e-15),
    (0.15, 1.19904086659517e-14),
    (0.16, 1.19904086659517e-14),
    (0.17, 1.29896093881143e-14),
    (0.18, 1.43218770176645e-14),
    (0.19, 1.59872115546023e-14),
    (0.2, 1.76325620770967e-12),
    (0.21, 3.83372279477712e-08),
    (0.22, 3.06613109425369e-05),
    (0.23, 0.00043885766684626),
    (0.24, 0.0016338903097507),
    (0.25, 0.0040209865060612),
    (0.26, 0.00810983455036318),
    (0.27, 0.0143276257563153),
    (0.28, 0.0227176403005931),
    (0.29, 0.0328448123349178),
    (0.3, 0.0440662287994253),
    (0.31, 0.0558313002451578),
    (0.32, 0.0677762780926909),
    (0.33, 0.0796902129014074),
    (0.34, 0.0914592177473008),
    (0.35, 0.103025445636137),
    (0.36, 0.114362289312337),
    (0.37, 0.125460330455003),
    (0.38, 0.13631951319735),
    (0.39, 0.146944778731009),
    (0.4, 0.157343613790698),
    (0.41, 0.167524666227893),
    (0.42, 0.177496963298401),
    (0.43, 0.187269474902781),
    (0.44, 0.196850876436266),
    (0.45, 0.206249427956348),
    (0.46, 0.215472921216235),
    (0.47, 0.22452866601795),
    (0.48, 0.233423498901652),
    (0.49, 0.242163804006271),
    (0.5, 0.250755540010068),
    (0.51, 0.259204269519744),
    (0.52, 0.267515188774178),
    (0.53, 0.275693156445011),
    (0.54, 0.283742720877265),
    (0.55, 0.291668145455368),
    (0.56, 0.299473431986384),
    (0.57, 0.307162342114144),
    (0.58, 0.314738416847184),
    (0.59, 0.32220499431984),
    (0.6, 0.329565225922113),
    (0.61, 0.336822090937985),
    (0.62, 0.343978409828671),
    (0.63, 0.351036856290108),
    (0.64, 0.357999968204744),
    (0.65, 0.364870157597603),
    (0.66, 0.371649719696545),
    (0.67, 0.378340841186795),
    (0.68, 0.38494560774077),
    (0.69, 0.391466010895728),
    (0.7, 0.397903954344144),
    (0.71, 0.404261259694788),
    (0.72, 0.41053967175627),
    (0.73, 0.416740863389285),
    (0.74, 0.422866439968834),
    (0.75, 0.428917943493333),
    (0.76, 0.434896856373598),
    (0.77, 0.440804604931231),
    (0.78, 0.446642562632898),
    (0.79, 0.4524120530842),
    (0.8, 0.458114352804472),
    (0.81, 0.463750693801667),
    (0.82, 0.469322265964569),
    (0.83, 0.474830219287884),
    (0.84, 0.480275665944236),
    (0.85, 0.485659682215741),
    (0.86, 0.49098331029664),
    (0.87, 0.49624755997735),
    (0.88, 0.501453410219388),
    (0.89, 0.506601810629702),
    (0.9, 0.5116936828422),
    (0.91, 0.516729921813551),
    (0.92, 0.521711397039719),
    (0.93, 0.526638953699123),
    (0.94, 0.531513413727796),
    (0.95, 0.536335576831473),
    (0.96, 0.541106221439116),
    (0.97, 0.545826105602002),
    (0.98, 0.550495967842166),
    (0.99, 0.555116527953698),
    (1.0, 0.559688487760067),
),
    0.4239: (
    (0.0, 0.0),
    (0.01, 6.66133814775094e-16),
    (0.02, 9.99200722162641e-16),
    (0.03, 0.109005425639857),
    (0.04, 0.161641740149829),
    (0.05, 0.186290044993605),
    (0.06, 0.205772449850714),
    (0.07, 0.222545969383147),
    (0.08, 0.237564522644154),
    (0.09, 0.251319304467609),
    (0.1, 0.264103441282026),
    (0.11, 0.276108841970643),
    (0.12, 0.287469467014207),
    (0.13, 0.298283342575036),
    (0.14, 0.308624845937651),
    (0.15, 0.318552055733137),
    (0.16, 0.32811139546395),
    (0.17, 0.337340698479743),
    (0.18, 0.346271305369791),
    (0.19, 0.35492954332804),
    (0.2, 0.363337796827614),
    (0.21, 0.371515299903803),
    (0.22, 0.379478733877978),
    (0.23, 0.387242686030213),
    (0.24, 0.39482000691018),
    (0.25, 0.402222092452746),
    (0.26, 0.409459109427732),
    (0.27, 0.416540177580215),
    (0.28, 0.423473518244064),
    (0.29, 0.430266576698543),
    (0.3, 0.436926123742249),
    (0.31, 0.443458340656588),
    (0.32, 0.449868890774107),
    (0.33, 0.456162980154989),
    (0.34, 0.462345409339171),
    (0.35, 0.468420617733997),
    (0.36, 0.4743927218843),
    (0.37, 0.480265548629181),
    (0.38, 0.486042663960119),
    (0.39, 0.491727398245589),
    (0.4, 0.497322868368768),
    (0.41, 0.502831997230047),
    (0.42, 0.50825753098979),
    (0.43, 0.513602054364969),
    (0.44, 0.518868004242988),
    (0.45, 0.524057681834811),
    (0.46, 0.529173263555525),
    (0.47, 0.534216810792471),
    (0.48, 0.539190278697638),
    (0.49, 0.544095524121617),
    (0.5, 0.548934312789972),
    (0.51, 0.553708325809195),
    (0.52, 0.558419165577707),
    (0.53, 0.563068361167528),
    (0.54, 0.567657373233817),
    (0.55, 0.57218759850227),
    (0.56, 0.576660373878241),
    (0.57, 0.581076980216108),
    (0.58, 0.585438645782855),
    (0.59, 0.58974654944589),
    (0.6, 0.594001823611652),
    (0.61, 0.598205556938614),
    (0.62, 0.60235879684566),
    (0.63, 0.606462551834536),
    (0.64, 0.610517793643089),
    (0.65, 0.614525459244247),
    (0.66, 0.618486452704153),
    (0.67, 0.6224016469115),
    (0.68, 0.626271885188901),
    (0.69, 0.63009798279609),
    (0.7, 0.633880728333757),
    (0.71, 0.637620885056023),
    (0.72, 0.641319192098774),
    (0.73, 0.644976365630419),
    (0.74, 0.648593099931053),
    (0.75, 0.652170068405415),
    (0.76, 0.655707924534627),
    (0.77, 0.659207302771194),
    (0.78, 0.662668819381401),
    (0.79, 0.666093073238875),
    (0.8, 0.669480646572768),
    (0.81, 0.672832105673717),
    (0.82, 0.676148001560509),
    (0.83, 0.679428870610095),
    (0.84, 0.682675235153444),
    (0.85, 0.685887604039475),
    (0.86, 0.689066473169174),
    (0.87, 0.692212326001814),
    (0.88, 0.695325634035062),
    (0.89, 0.698406857260628),
    (0.9, 0.701456444596966),
    (0.91, 0.704474834300461),
    (0.92, 0.707462454356395),
    (0.93, 0.710419722850918),
    (0.94, 0.713347048325162),
    (0.95, 0.716244830112526),
    (0.96, 0.719113458660144),
    (0.97, 0.721953315835418),
    (0.98, 0.724764775218485),
    (0.99, 0.727548202381402),
    (1.0, 0.730303955154792),
),
    0.5438: (
    (0.0, 0.743408934278332),
    (0.01, 0.745504811766463),
    (0.02, 0.747583001509365),
    (0.03, 0.749643720467772),
    (0.04, 0.75168718092428),
    (0.05, 0.753713590634806),
    (0.06, 0.755723152973665),
    (0.07, 0.757716067072591),
    (0.08, 0.75969252795401),
    (0.09, 0.761652726658861),
    (0.1, 0.763596850369228),
    (0.11, 0.765525082526046),
    (0.12, 0.767437602942124),
    (0.13, 0.769334587910702),
    (0.14, 0.771216210309771),
    (0.15, 0.773082639702349),
    (0.16, 0.774934042432908),
    (0.17, 0.776770581720128),
    (0.18, 0.778592417746156),
    (0.19, 0.780399707742524),
    (0.2, 0.782192606072885),
    (0.21, 0.783971264312701),
    (0.22, 0.785735831326037),
    (0.23, 0.787486453339571),
    (0.24, 0.789223274013953),
    (0.25, 0.790946434512633),
    (0.26, 0.792656073568254),
    (0.27, 0.794352327546736),
    (0.28, 0.796035330509121),
    (0.29, 0.797705214271309),
    (0.3, 0.799362108461738),
    (0.31, 0.801006140577126),
    (0.32, 0.802637436036327),
    (0.33, 0.804256118232404),
    (0.34, 0.805862308582971),
    (0.35, 0.807456126578887),
    (0.36, 0.809037689831364),
    (0.37, 0.810607114117552),
    (0.38, 0.812164513424659),
    (0.39, 0.813709999992671),
    (0.4, 0.81524368435572),
    (0.41, 0.816765675382152),
    (0.42, 0.818276080313348),
    (0.43, 0.819775004801353),
    (0.44, 0.821262552945335),
    (0.45, 0.822738827326945),
    (0.46, 0.824203929044606),
    (0.47, 0.825657957746764),
    (0.48, 0.82710101166416),
    (0.49, 0.828533187641133),
    (0.5, 0.829954581166011),
    (0.51, 0.831365286400611),
    (0.52, 0.832765396208886),
    (0.53, 0.834155002184742),
    (0.54, 0.835534194679062),
    (0.55, 0.836903062825964),
    (0.56, 0.838261694568313),
    (0.57, 0.839610176682519),
    (0.58, 0.840948594802648),
    (0.59, 0.842277033443861),
    (0.6, 0.843595576025209),
    (0.61, 0.84490430489181),
    (0.62, 0.84620330133642),
    (0.63, 0.847492645620419),
    (0.64, 0.848772416994247),
    (0.65, 0.850042693717281),
    (0.66, 0.851303553077197),
    (0.67, 0.852555071408819),
    (0.68, 0.853797324112475),
    (0.69, 0.855030385671881),
    (0.7, 0.856254329671556),
    (0.71, 0.857469228813798),
    (0.72, 0.858675154935222),
    (0.73, 0.859872179022885),
    (0.74, 0.861060371229999),
    (0.75, 0.862239800891255),
    (0.76, 0.863410536537764),
    (0.77, 0.864572645911631),
    (0.78, 0.865726195980165),
    (0.79, 0.866871252949752),
    (0.8, 0.86800788227938),
    (0.81, 0.869136148693847),
    (0.82, 0.870256116196645),
    (0.83, 0.871367848082543),
    (0.84, 0.872471406949862),
    (0.85, 0.873566854712473),
    (0.86, 0.874654252611505),
    (0.87, 0.875733661226779),
    (0.88, 0.876805140487987),
    (0.89, 0.8778687496856),
    (0.9, 0.878924547481537),
    (0.91, 0.879972591919584),
    (0.92, 0.881012940435581),
    (0.93, 0.882045649867377),
    (0.94, 0.883070776464561),
    (0.95, 0.884088375897981),
    (0.96, 0.885098503269047),
    (0.97, 0.886101213118831),
    (0.98, 0.887096559436965),
    (0.99, 0.888084595670352),
    (1.0, 0.889065374731678),
),
}

SUCCESS_CURVES_TWO_STATE = {
    'alpha09_one': (
    (2.0, 0.405),
    (4.0, 0.486),
    (6.0, 0.5637195),
    (8.0, 0.62956359),
    (10.0, 0.68547202965),
    (12.0, 0.732942419688),
    (14.0, 0.773248302669195),
    (16.0, 0.80747098740681),
    (18.0, 0.836528585556621),
    (20.0, 0.861200642021762),
    (22.0, 0.882149048255504),
    (24.0, 0.899935799204049),
    (26.0, 0.915038070268278),
    (28.0, 0.927861018762764),
    (30.0, 0.938748653304149),
    (32.0, 0.947993062728216),
    (34.0, 0.955842252125136),
    (36.0, 0.962506796214705),
    (38.0, 0.968165488555501),
    (40.0, 0.972970138142544),
    (42.0, 0.977049642074549),
    (44.0, 0.980513443550543),
    (46.0, 0.983454467965541),
    (48.0, 0.985951615873571),
    (50.0, 0.988071879698237),
    (52.0, 0.989872140977006),
    (54.0, 0.991400696354942),
    (56.0, 0.992698553266588),
    (58.0, 0.993800530066001),
    (60.0, 0.994736190118778),
    (62.0, 0.995530634915463),
    (64.0, 0.996205177483682),
    (66.0, 0.996777914164995),
    (68.0, 0.997264210095861),
    (70.0, 0.997677111416997),
    (72.0, 0.998027695269698),
    (74.0, 0.998325366968681),
    (76.0, 0.998578112323872),
    (78.0, 0.998792711880327),
    (80.0, 0.99897492282381),
    (82.0, 0.999129633432134),
    (84.0, 0.999260994215797),
    (86.0, 0.999372529266117),
    (88.0, 0.99946723079806),
    (90.0, 0.999547639424106),
    (92.0, 0.999615912312727),
    (94.0, 0.999673881059986),
    (96.0, 0.999723100826817),
    (98.0, 0.999764892060221),
    (100.0, 0.999800375917661),
),
    'alpha09_two': (
    (2.0, 0.0),
    (4.0, 0.48195),
    (6.0, 0.5596695),
    (8.0, 0.62551359),
    (10.0, 0.6820515576),
    (12.0, 0.7300430845875),
    (14.0, 0.770786304014475),
    (16.0, 0.80538053219321),
    (18.0, 0.834753636763244),
    (20.0, 0.859693579063274),
    (22.0, 0.880869439974694),
    (24.0, 0.898849316844532),
    (26.0, 0.914115566144686),
    (28.0, 0.927077744325936),
    (30.0, 0.938083595200119),
    (32.0, 0.947428379060604),
    (34.0, 0.955362793800314),
    (36.0, 0.962099700528347),
    (38.0, 0.967819834117417),
    (40.0, 0.972676651882261),
    (42.0, 0.976800450467309),
    (44.0, 0.980301861389735),
    (46.0, 0.983274819014806),
    (48.0, 0.985799080587152),
    (50.0, 0.987942365924247),
    (52.0, 0.989762174174918),
    (54.0, 0.99130732638209),
    (56.0, 0.992619275232991),
    (58.0, 0.993733217134243),
    (60.0, 0.99467903644611),
    (62.0, 0.995482107207426),
    (64.0, 0.996163973859533),
    (66.0, 0.996742929231405),
    (68.0, 0.997234505291888),
    (70.0, 0.997651889834775),
    (72.0, 0.998006280275331),
    (74.0, 0.998307184049793),
    (76.0, 0.998562673676838),
    (78.0, 0.998779603323679),
    (80.0, 0.998963792686759),
    (82.0, 0.999120183120089),
    (84.0, 0.9992529701998),
    (86.0, 0.999365716281275),
    (88.0, 0.999461446068508),
    (90.0, 0.999542727759576),
    (92.0, 0.99961174194517),
    (94.0, 0.999670340108552),
    (96.0, 0.999720094296364),
    (98.0, 0.999762339292827),
    (100.0, 0.999798208428767),
),
    'iid_one': (
    (2.0, 0.125),
    (4.0, 0.25),
    (6.0, 0.3671875),
    (8.0, 0.46484375),
    (10.0, 0.54736328125),
    (12.0, 0.6171875),
    (14.0, 0.676239013671875),
    (16.0, 0.726181030273438),
    (18.0, 0.76841926574707),
    (20.0, 0.804141998291016),
    (22.0, 0.834354281425476),
    (24.0, 0.859906136989594),
    (26.0, 0.881516464054585),
    (28.0, 0.899793267250061),
    (30.0, 0.91525076283142),
    (32.0, 0.928323846077546),
    (34.0, 0.939380327035906),
    (36.0, 0.948731278826017),
    (38.0, 0.956639789654218),
    (40.0, 0.963328364777226),
    (42.0, 0.968985186667965),
    (44.0, 0.973769409512897),
    (46.0, 0.977815637001065),
    (48.0, 0.981237709387042),
    (50.0, 0.984131906376487),
    (52.0, 0.986579655947197),
    (54.0, 0.988649825318101),
    (56.0, 0.990400658522408),
    (58.0, 0.991881415098362),
    (60.0, 0.993133756002017),
    (62.0, 0.994192915734573),
    (64.0, 0.995088693661968),
    (66.0, 0.995846292417419),
    (68.0, 0.996487026975289),
    (70.0, 0.997028924346024),
    (72.0, 0.997487230764496),
    (74.0, 0.997874840641487),
    (76.0, 0.998202659346803),
    (78.0, 0.998479910030891),
    (80.0, 0.998714393117366),
    (82.0, 0.998912705767249),
    (84.0, 0.999080427489505),
    (86.0, 0.999222277120041),
    (88.0, 0.999342245585738),
    (90.0, 0.999443708188829),
    (92.0, 0.999529519570731),
    (94.0, 0.999602094027127),
    (96.0, 0.999663473433967),
    (98.0, 0.999715384695463),
    (100.0, 0.999759288330394),
),
    'iid_two': (
    (2.0, 0.0),
    (4.0, 0.21875),
    (6.0, 0.3359375),
    (8.0, 0.43359375),
    (10.0, 0.5234375),
    (12.0, 0.5965576171875),
    (14.0, 0.658660888671875),
    (16.0, 0.711410522460938),
    (18.0, 0.755905151367188),
    (20.0, 0.793555736541748),
    (22.0, 0.825404524803162),
    (24.0, 0.852335870265961),
    (26.0, 0.875113964080811),
    (28.0, 0.894378511235118),
    (30.0, 0.910671218764037),
    (32.0, 0.924450728809461),
    (34.0, 0.936104665277526),
    (36.0, 0.945960905803076),
    (38.0, 0.954296763773527),
    (40.0, 0.961346764931477),
    (42.0, 0.967309260528054),
    (44.0, 0.972352005150441),
    (46.0, 0.97661687585002),
    (48.0, 0.980223864402941),
    (50.0, 0.983274453123922),
    (52.0, 0.985854470053301),
    (54.0, 0.988036503741439),
    (56.0, 0.9898819455145),
    (58.0, 0.991442716714296),
    (60.0, 0.992762729501335),
    (62.0, 0.99387912231931),
    (64.0, 0.994823304781977),
    (66.0, 0.995621841379898),
    (68.0, 0.996297198870036),
    (70.0, 0.996868378375989),
    (72.0, 0.99735144998293),
    (74.0, 0.997760004868041),
    (76.0, 0.998105537687089),
    (78.0, 0.998397769975553),
    (80.0, 0.998644923663171),
    (82.0, 0.998853952397211),
    (84.0, 0.999030737182724),
    (86.0, 0.999180251844106),
    (88.0, 0.999306702963206),
    (90.0, 0.999413648231141),
    (92.0, 0.99950409654362),
    (94.0, 0.999580592655962),
    (96.0, 0.999645288779559),
    (98.0, 0.999700005134161),
    (100.0, 0.999746281159593),
),
    'alpha01_one': (
    (2.0, 0.005),
    (4.0, 0.014),
    (6.0, 0.0229595),
    (8.0, 0.03183719),
    (10.0, 0.04063368965),
    (12.0, 0.049349933528),
    (14.0, 0.057986777447195),
    (16.0, 0.0665450224121543),
    (18.0, 0.0750254325572287),
    (20.0, 0.0834287464735762),
    (22.0, 0.0917556843506048),
    (24.0, 0.100006952486052),
    (26.0, 0.108183246141926),
    (28.0, 0.11628525136054),
    (30.0, 0.124313646126722),
    (32.0, 0.132269101118884),
    (34.0, 0.140152280201469),
    (36.0, 0.147963840754657),
    (38.0, 0.155704433901613),
    (40.0, 0.163374704671125),
    (42.0, 0.170975292119484),
    (44.0, 0.178506829426534),
    (46.0, 0.18596994397534),
    (48.0, 0.193365257421361),
    (50.0, 0.200693385754865),
    (52.0, 0.207954939358924),
    (54.0, 0.21515052306445),
    (56.0, 0.222280736203215),
    (58.0, 0.229346172659433),
    (60.0, 0.236347420920264),
    (62.0, 0.243285064125489),
    (64.0, 0.250159680116488),
    (66.0, 0.256971841484634),
    (68.0, 0.263722115619139),
    (70.0, 0.270411064754424),
    (72.0, 0.277039246017005),
    (74.0, 0.283607211471939),
    (76.0, 0.290115508168833),
    (78.0, 0.296564678187422),
    (80.0, 0.302955258682729),
    (82.0, 0.309287781929812),
    (84.0, 0.315562775368103),
    (86.0, 0.321780761645339),
    (88.0, 0.327942258661095),
    (90.0, 0.334047779609922),
    (92.0, 0.340097833024094),
    (94.0, 0.346092922815959),
    (96.0, 0.352033548319917),
    (98.0, 0.357920204334003),
    (100.0, 0.363753381161105),
),
    'alpha01_two': (
    (2.0, 0.0),
    (4.0, 0.00995),
    (6.0, 0.0189095),
    (8.0, 0.02778719),
    (10.0, 0.0366562616),
    (12.0, 0.0453797265875),
    (14.0, 0.054075536123675),
    (16.0, 0.0626512417881215),
    (18.0, 0.0711812929557757),
    (20.0, 0.0796082728727249),
    (22.0, 0.0879788046809135),
    (24.0, 0.0962573733489448),
    (26.0, 0.104473265438987),
    (28.0, 0.112604607878743),
    (30.0, 0.120669887483258),
    (32.0, 0.128655725205424),
    (34.0, 0.136573877972471),
    (36.0, 0.144416253420574),
    (38.0, 0.1521904128697),
    (40.0, 0.159891552632824),
    (42.0, 0.167524616688367),
    (44.0, 0.175086845497959),
    (46.0, 0.182581548679204),
    (48.0, 0.190007235711041),
    (50.0, 0.197366194125651),
    (52.0, 0.204657719685941),
    (54.0, 0.211883459247537),
    (56.0, 0.219043194255752),
    (58.0, 0.226138168514063),
    (60.0, 0.233168461992592),
    (62.0, 0.240135063514875),
    (64.0, 0.247038235076883),
    (66.0, 0.253878802817915),
    (68.0, 0.260657138269572),
    (70.0, 0.267373962442077),
    (72.0, 0.274029711321979),
    (74.0, 0.280625036706736),
    (76.0, 0.287160411027828),
    (78.0, 0.293636439307564),
    (80.0, 0.300053613043469),
    (82.0, 0.306412504524057),
    (84.0, 0.312713613554323),
    (86.0, 0.318957488499618),
    (88.0, 0.325144630836053),
    (90.0, 0.331275570557374),
    (92.0, 0.337350806740779),
    (94.0, 0.343370854528929),
    (96.0, 0.34933620812734),
    (98.0, 0.355247370081958),
    (100.0, 0.36110482824757),
),
}

SUCCESS_CURVES_FOUR_STATE = {
    'alpha09_one': (
    (2.0, 0.426274509803921),
    (4.0, 0.499632274509803),
    (6.0, 0.566793994086274),
    (8.0, 0.62282604301881),
    (10.0, 0.669625228479611),
    (12.0, 0.708712471752033),
    (14.0, 0.74135861158571),
    (16.0, 0.768625063650278),
    (18.0, 0.791398335221836),
    (20.0, 0.810418847932612),
    (22.0, 0.826305010912928),
    (24.0, 0.839573326971212),
    (26.0, 0.850655185519475),
    (28.0, 0.859910888228413),
    (30.0, 0.867641363424712),
    (32.0, 0.874097950097801),
    (34.0, 0.879490569620991),
    (36.0, 0.883994550872123),
    (38.0, 0.887756330657125),
    (40.0, 0.890898214772937),
    (42.0, 0.893522354505027),
    (44.0, 0.895714067846355),
    (46.0, 0.897544613419753),
    (48.0, 0.899073507291548),
    (50.0, 0.900350458002407),
    (52.0, 0.901416982728581),
    (54.0, 0.902307757119375),
    (56.0, 0.903051742697789),
    (58.0, 0.903673128479203),
    (60.0, 0.904192117422735),
    (62.0, 0.904625583284949),
    (64.0, 0.904987619232047),
    (66.0, 0.905289996047424),
    (68.0, 0.905542544832181),
    (70.0, 0.90575347664123),
    (72.0, 0.905929649447254),
    (74.0, 0.906076791112243),
    (76.0, 0.906199685616022),
    (78.0, 0.906302328596583),
    (80.0, 0.906388057259251),
    (82.0, 0.906459658878405),
    (84.0, 0.906519461419422),
    (86.0, 0.906569409227227),
    (88.0, 0.906611126242291),
    (90.0, 0.9066459687994),
    (92.0, 0.906675069725821),
    (94.0, 0.906699375172632),
    (96.0, 0.906719675376692),
    (98.0, 0.906736630353412),
    (100.0, 0.906750791355673),
),
    'alpha09_two': (
    (2.0, 0.0293137254901961),
    (4.0, 0.50501956862745),
    (6.0, 0.574056502925489),
    (8.0, 0.632502797790189),
    (10.0, 0.682414241997006),
    (12.0, 0.724743306443847),
    (14.0, 0.760687286124973),
    (16.0, 0.791249554533367),
    (18.0, 0.817270291895932),
    (20.0, 0.839455277623416),
    (22.0, 0.858397667038957),
    (24.0, 0.87459622222846),
    (26.0, 0.8884705786043),
    (28.0, 0.900374020332802),
    (30.0, 0.91060417316684),
    (32.0, 0.91941195598577),
    (34.0, 0.927009076197722),
    (36.0, 0.933574307324618),
    (38.0, 0.93925874795896),
    (40.0, 0.944190228585995),
    (42.0, 0.948477005446165),
    (44.0, 0.95221085778575),
    (46.0, 0.955469685768976),
    (48.0, 0.958319690385027),
    (50.0, 0.960817203362587),
    (52.0, 0.963010223971729),
    (54.0, 0.964939710288304),
    (56.0, 0.966640664718684),
    (58.0, 0.968143047081694),
    (60.0, 0.969472543109835),
    (62.0, 0.970651211688339),
    (64.0, 0.971698030351569),
    (66.0, 0.972629355379582),
    (68.0, 0.973459310181014),
    (70.0, 0.974200113426401),
    (72.0, 0.974862356537366),
    (74.0, 0.975455238582027),
    (76.0, 0.975986765325806),
    (78.0, 0.976463918097867),
    (80.0, 0.976892797221881),
    (82.0, 0.97727874399672),
    (84.0, 0.977626444573594),
    (86.0, 0.977940018540913),
    (88.0, 0.978223094579684),
    (90.0, 0.978478875176419),
    (92.0, 0.97871019206548),
    (94.0, 0.978919553808576),
    (96.0, 0.979109186697458),
    (98.0, 0.979281069979885),
    (100.0, 0.979436966252747),
),
    'iid_one': (
    (2.0, 0.146629124544858),
    (4.0, 0.276420349593485),
    (6.0, 0.392172207342438),
    (8.0, 0.485007589230803),
    (10.0, 0.560414789111791),
    (12.0, 0.621740425617048),
    (14.0, 0.671590727796619),
    (16.0, 0.712113847668071),
    (18.0, 0.745055255110135),
    (20.0, 0.771833413778511),
    (22.0, 0.793601449582003),
    (24.0, 0.811296744175491),
    (26.0, 0.825681296476039),
    (28.0, 0.837374537502465),
    (30.0, 0.846880004400028),
    (32.0, 0.854607023858224),
    (34.0, 0.860888338637444),
    (36.0, 0.865994436217387),
    (38.0, 0.870145196593567),
    (40.0, 0.873519360802286),
    (42.0, 0.876262227909897),
    (44.0, 0.87849191191596),
    (46.0, 0.88030442800655),
    (48.0, 0.881777827183167),
    (50.0, 0.882975557313633),
    (52.0, 0.883949195339358),
    (54.0, 0.884740668293928),
    (56.0, 0.885384058775056),
    (58.0, 0.885907072617559),
    (60.0, 0.886332231968642),
    (62.0, 0.886677845141992),
    (64.0, 0.886958795014759),
    (66.0, 0.887187179917578),
    (68.0, 0.887372834615769),
    (70.0, 0.88752375381636),
    (72.0, 0.88764643643807),
    (74.0, 0.887746165469305),
    (76.0, 0.887827235465467),
    (78.0, 0.887893137482124),
    (80.0, 0.887946709407683),
    (82.0, 0.887990258169218),
    (84.0, 0.888025659073918),
    (86.0, 0.888054436564008),
    (88.0, 0.888077829862652),
    (90.0, 0.888096846337672),
    (92.0, 0.888112304881065),
    (94.0, 0.888124871172324),
    (96.0, 0.888135086344091),
    (98.0, 0.888143390284535),
    (100.0, 0.888150140579926),
),
    'iid_two': (
    (2.0, 0.0289330649599325),
    (4.0, 0.25020672472462),
    (6.0, 0.369676261835534),
    (8.0, 0.467060446212284),
    (10.0, 0.553693694842037),
    (12.0, 0.62281695903099),
    (14.0, 0.680233974313184),
    (16.0, 0.727996118295151),
    (18.0, 0.767546455629149),
    (20.0, 0.800449465712742),
    (22.0, 0.827865577024302),
    (24.0, 0.850748002502905),
    (26.0, 0.869890259288517),
    (28.0, 0.885938246305614),
    (30.0, 0.899422765249232),
    (32.0, 0.910780381240209),
    (34.0, 0.920370034485095),
    (36.0, 0.928487376083498),
    (38.0, 0.935376206817402),
    (40.0, 0.94123782153696),
    (42.0, 0.946238664638477),
    (44.0, 0.950516572394401),
    (46.0, 0.954185875805846),
    (48.0, 0.957341574038244),
    (50.0, 0.960062748672721),
    (52.0, 0.962415359176626),
    (54.0, 0.964454533341559),
    (56.0, 0.966226445371931),
    (58.0, 0.967769857202011),
    (60.0, 0.969117384608871),
    (62.0, 0.970296538314153),
    (64.0, 0.971330581006145),
    (66.0, 0.972239233669233),
    (68.0, 0.973039258465071),
    (70.0, 0.973744940405959),
    (72.0, 0.974368485983996),
    (74.0, 0.974920353597209),
    (76.0, 0.97540952790559),
    (78.0, 0.975843748041705),
    (80.0, 0.976229697799323),
    (82.0, 0.976573164453851),
    (84.0, 0.976879171668719),
    (86.0, 0.977152090962194),
    (88.0, 0.977395735408756),
    (90.0, 0.977613438594898),
    (92.0, 0.977808121314135),
    (94.0, 0.977982348048069),
    (96.0, 0.978138374921694),
    (98.0, 0.978278190527224),
    (100.0, 0.978403550769601),
),
    'alpha01_one': (
    (2.0, 0.0341176470588235),
    (4.0, 0.0611616862745098),
    (6.0, 0.0869294136941176),
    (8.0, 0.111442628725478),
    (10.0, 0.134762314155686),
    (12.0, 0.156946767031424),
    (14.0, 0.178051364926043),
    (16.0, 0.198128738548086),
    (18.0, 0.217228926264788),
    (20.0, 0.235399512732435),
    (22.0, 0.252685755754747),
    (24.0, 0.269130703967499),
    (26.0, 0.284775307005084),
    (28.0, 0.299658519236687),
    (30.0, 0.31381739781586),
    (32.0, 0.327287195577438),
    (34.0, 0.340101449186057),
    (36.0, 0.352292062859016),
    (38.0, 0.363889387933539),
    (40.0, 0.374922298513356),
    (42.0, 0.385418263404878),
    (44.0, 0.395403414535188),
    (46.0, 0.404902612030006),
    (48.0, 0.413939506118332),
    (50.0, 0.422536596020664),
    (52.0, 0.430715285969093),
    (54.0, 0.438495938499716),
    (56.0, 0.44589792515066),
    (58.0, 0.452939674692288),
    (60.0, 0.459638719009879),
    (62.0, 0.466011736753138),
    (64.0, 0.47207459486129),
    (66.0, 0.477842388067193),
    (68.0, 0.483329476478834),
    (70.0, 0.488549521331812),
    (72.0, 0.493515519001813),
    (74.0, 0.498239833361774),
    (76.0, 0.502734226564297),
    (78.0, 0.507009888325952),
    (80.0, 0.51107746378638),
    (82.0, 0.514947080011562),
    (84.0, 0.518628371207231),
    (86.0, 0.522130502705215),
    (88.0, 0.525462193782411),
    (90.0, 0.528631739369223),
    (92.0, 0.531647030701496),
    (94.0, 0.534515574967371),
    (96.0, 0.537244513997976),
    (98.0, 0.539840642048484),
    (100.0, 0.542310422713806),
),
    'alpha01_two': (
    (2.0, 0.0293137254901961),
    (4.0, 0.0578038823529412),
    (6.0, 0.0843194362588235),
    (8.0, 0.109813572183915),
    (10.0, 0.134394225669291),
    (12.0, 0.15797693092698),
    (14.0, 0.180704955713044),
    (16.0, 0.202536234231215),
    (18.0, 0.22356766857528),
    (20.0, 0.243787247138646),
    (22.0, 0.26326319403767),
    (24.0, 0.281999933878527),
    (26.0, 0.300048017798203),
    (28.0, 0.317420434686644),
    (30.0, 0.334156538822393),
    (32.0, 0.350273402292324),
    (34.0, 0.365803022537918),
    (36.0, 0.380764033256872),
    (38.0, 0.395183380166141),
    (40.0, 0.409079866555177),
    (42.0, 0.422476794542083),
    (44.0, 0.435392393950394),
    (46.0, 0.447847204565683),
    (48.0, 0.459858510492346),
    (50.0, 0.471444658741292),
    (52.0, 0.482621825402086),
    (54.0, 0.493406547914383),
    (56.0, 0.503813849143576),
    (58.0, 0.51385872706803),
    (60.0, 0.523555069722281),
    (62.0, 0.532916535641344),
    (64.0, 0.541955929359104),
    (66.0, 0.550685725290136),
    (68.0, 0.55911771128083),
    (70.0, 0.567263303388027),
    (72.0, 0.575133345254062),
    (74.0, 0.582738299917241),
    (76.0, 0.590088139567335),
    (78.0, 0.597192464757525),
    (80.0, 0.604060446378932),
    (82.0, 0.610700901769392),
    (84.0, 0.617122266662228),
    (86.0, 0.623332645494471),
    (88.0, 0.629339800374715),
    (90.0, 0.635151185765279),
    (92.0, 0.640773946937302),
    (94.0, 0.646214945029846),
    (96.0, 0.651480760626826),
    (98.0, 0.65657771275179),
    (100.0, 0.661511865049646),
),
}

# (d, value, printed decimal places)
DESIGN_SUCCESS_CURVES = {
    't0_both': (
    (0.0, 0.5, 1),
    (2.0, 0.5, 1),
    (4.0, 0.5, 1),
    (6.0, 0.5, 1),
    (8.0, 0.5, 1),
    (10.0, 0.5, 1),
    (12.0, 0.5, 1),
    (14.0, 0.5, 1),
    (16.0, 0.5, 1),
    (18.0, 0.5, 1),
    (20.0, 0.5, 1),
    (22.0, 0.5, 1),
    (24.0, 0.5, 1),
    (26.0, 0.5, 1),
    (28.0, 0.5, 1),
    (30.0, 0.5, 1),
),
    't1_e1': (
    (2.0, 0.495, 3),
    (4.0, 0.58095, 5),
    (6.0, 0.652239, 6),
    (8.0, 0.711400275, 9),
    (10.0, 0.76049700435, 11),
    (12.0, 0.801241373583, 12),
    (14.0, 0.835054290373455, 15),
    (16.0, 0.86311493687261, 14),
    (18.0, 0.886401892175229, 15),
    (20.0, 0.905727259011752, 15),
    (22.0, 0.921764984790537, 15),
    (24.0, 0.935074364650245, 15),
    (26.0, 0.946119546161224, 15),
    (28.0, 0.955285715877351, 15),
    (30.0, 0.962892532223585, 15),
),
    't1_e2': (
    (2.0, 0.495, 3),
    (4.0, 0.495, 3),
    (6.0, 0.495, 3),
    (8.0, 0.495, 3),
    (10.0, 0.495, 3),
    (12.0, 0.495, 3),
    (14.0, 0.495, 3),
    (16.0, 0.495, 3),
    (18.0, 0.495, 3),
    (20.0, 0.495, 3),
    (22.0, 0.495, 3),
    (24.0, 0.495, 3),
    (26.0, 0.495, 3),
    (28.0, 0.495, 3),
    (30.0, 0.495, 3),
),
    't2_24_j2': (
    (12.0, 0.3902, 4),
    (14.0, 0.442, 3),
    (16.0, 0.4886, 4),
    (18.0, 0.531, 3),
    (20.0, 0.5706, 4),
    (22.0, 0.6072, 4),
    (24.0, 0.6414, 4),
    (26.0, 0.6736, 4),
    (28.0, 0.7027, 4),
    (30.0, 0.7292, 4),
),
}

DESIGN_TABLE_L4R6 = (
    # (t, d_c, j, eps1, eps2, eps3, eps_g, q_at_0435); M = 50
    (0, (), None, 0.5061, 0.5061, 0.5061, 0.5061, 1),
    (1, (3,), 1, 0.4294, 0.4788, 0.5474, 0.5564, 2),
    (2, (1, 5), 1, 0.2, 0.4368, 0.5320, 0.5836, 10),
    (2, (1, 5), 2, 0.2, 0.4423, 0.5175, 0.5655, 5),
    (2, (2, 4), 1, 0.2, 0.4386, 0.5918, 0.6114, 11),
    (2, (2, 4), 2, 0.2, 0.4442, 0.5722, 0.5966, 7),
    (2, (2, 4), 3, 0.2, 0.4488, 0.5594, 0.5863, 5),
    (2, (3, 3), 1, 0.2, 0.4345, 0.4991, 0.6338, float("inf")),
    (2, (3, 3), 2, 0.2, 0.4411, 0.5974, 0.6104, 10),
    (2, (3, 3), 3, 0.2, 0.4463, 0.5802, 0.5982, 7),
    (2, (3, 3), 4, 0.2, 0.4507, 0.5688, 0.5900, 6),
)

DESIGN_TABLE_L4R16 = (
    # (t, d_c, j, eps1, eps2, eps3, eps_g, q_at_016); M = 8
    (0, (), None, 0.1931, 0.1931, 0.1931, 0.1931, 1),
    (1, (8,), 1, 0.1568, 0.1794, 0.2036, 0.2119, 2),
    (2, (5, 11), 1, 0.0667, 0.1601, 0.2082, 0.2288, 33),
    (2, (6, 10), 2, 0.0667, 0.1609, 0.2121, 0.2298, 15),
    (2, (7, 9), 3, 0.0667, 0.1613, 0.2142, 0.2304, 13),
    (2, (8, 8), 4, 0.0667, 0.1615, 0.2149, 0.2306, 12),
    (2, (6, 10), 1, 0.0667, 0.1598, 0.1999, 0.2326, float("inf")),
    (2, (7, 9), 2, 0.0667, 0.1604, 0.1999, 0.2330, 25),
    (2, (8, 8), 3, 0.0667, 0.1605, 0.1999, 0.2331, 21),
    (2, (7, 9), 1, 0.0667, 0.1592, 0.1667, 0.2368, float("inf")),
    (2, (8, 8), 2, 0.0667, 0.1594, 0.1667, 0.2368, float("inf")),
    (2, (8, 8), 1, 0.0667, 0.1428, 0.1429, 0.2431, float("inf")),
)

COUNTING_MATRIX_SQUARED_Q2 = (
    (16, 0, 0, 0),
    (9, 1, 1, 5),
    (7, 1, 2, 6),
    (0, 0, 0, 16),
)
