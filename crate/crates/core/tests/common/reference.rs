//! High-precision reference values (mpmath, 40-50 digits).

pub const E1_TABLE: &[(f64, f64, f64, f64)] = &[
    (1e-08, 0.0, 17.843465089050833, 0.0),
    (1e-08, 1e-08, 17.49689149877086, -0.78539815339744836),
    (0.0001, -0.0002, 7.8285057583569885, 1.1069487277942016),
    (0.1, 0.0, 1.8229239584193906, 0.0),
    (0.5, 0.5, 0.2578664571379838, -0.39669043545581521),
    (1.0, 0.0, 0.21938393439552027, 0.0),
    (1.0, 1.0, 0.00028162445198141833, -0.17932453503935894),
    (1.0, -1.0, 0.00028162445198141833, 0.17932453503935894),
    (2.0, -3.0, -0.024826207944199363, -0.020316674911044623),
    (3.9, 0.5, 0.0034820408595499213, -0.0024217367107109238),
    (4.0, 0.0, 0.0037793524098489065, 0.0),
    (4.1, 0.0, 0.0033488806360697113, 0.0),
    (2.8, -2.9, -0.01164211457822064, -0.0055097417469112503),
    (-1.0, 0.001, -1.8951178163557102, -3.138874372214381),
    (-1.0, -1.0, -1.7646259855638541, 0.75382280207927082),
    (-3.0, 2.0, -2.8074890821669043, 5.9603353047969977),
    (-3.5, -2.0, -3.2175615759813044, -9.3364048471348654),
    (-5.0, 0.5, -37.262468961367937, 11.283268496460262),
    (-10.0, 1.0, -1568.2778927835054, 1911.0329027719068),
    (-20.0, -0.5, -22789165.335691648, -11676954.225937664),
    (-40.0, 2.0, 2225497109438622.7, 5606180151503450.7),
    (-45.0, -0.01, -7.9435365059114611e+17, -7763047583220250.5),
    (-60.0, 3.0, 1.8979894978069779e+24, 3.698001717911159e+23),
    (-100.0, 0.1, -2.702257432574982e+41, 2.6837278070712366e+40),
    (-5.0, -5.0, 13.470936071475246, 18.464085049321024),
    (-30.0, 30.0, 154596484273.69323, -204179357837.4139),
    (5.0, 0.0, 0.0011482955912753258, 0.0),
    (10.0, 0.0, 4.1569689296853243e-6, 0.0),
    (20.0, 0.0, 9.8355252906498817e-11, 0.0),
    (50.0, 0.0, 3.783264029550459e-24, 0.0),
    (100.0, 0.0, 3.6835977616820322e-46, 0.0),
    (5.0, -20.0, -0.00024419662286542967, 0.00021008322966152756),
    (0.5, -50.0, 0.0035289016084503538, 0.011595251965969703),
    (-0.5, -50.0, 0.0089646306718927043, 0.031717096317701503),
    (50.0, -10000.0, 5.8007261824487552e-27, -1.8394278736961476e-26),
    (-50.0, -10000.0, 1.6086715324112909e+17, -4.9287626621666289e+17),
    (0.05, -10.0, 0.042813377695981772, -0.083452523262954139),
    (-0.05, -10.0, 0.048256509865052117, -0.091846211690633385),
    (300.0, 300.0, 8.3601456258712796e-134, 8.7671108476549401e-134),
    (0.0, 700.0, -0.00077881001273975634, 0.0011976054425949514),
    (-200.0, 999.0, -1.2012775615587521e+83, -6.991374246300337e+83),
    (0.0, -1000.0, -0.00082631551109068228, 0.00056320482612540108),
    (700.0, -10.0, -1.1690164198754807e-307, -7.8185238007554661e-308),
];
pub const E1_SCALED_TABLE: &[(f64, f64, f64, f64)] = &[
    (400.0, 30.0, 0.0024799006374838666, -0.00018553100390482058),
    (800.0, 1.0, 0.001248439445840208, -1.5586058963785136e-6),
    (-800.0, 5.0, -0.0012515174107396641, -7.8317981614461723e-6),
    (150.0, -30000.0, 1.6777352676698989e-7, 3.3332488836214422e-5),
    (-150.0, -30000.0, -1.6555147121930124e-7, 3.3332511057325278e-5),
    (10000.0, -2000000.0, 2.5001874828094921e-9, 4.9998749781236722e-7),
    (-10000.0, -2000000.0, -2.4996875203079304e-9, 4.9998750281211723e-7),
    (2.0, -200.0, 7.4976263610494862e-5, 0.0049987505245868304),
    (-2.0, -200.0, -2.4998749875255773e-5, 0.0049997500249912607),
];

/// `i b'(s)/b(s)` for the reduced amplitude `b(s) = a(t) e^{iE_min t/ħ}` at
/// `s = γ⁰t/ħ`, so that `h(t) = E_min + γ⁰·value`. Columns: x, s, re, im.
pub const REDUCED_H_TABLE: &[(f64, f64, f64, f64)] = &[
    (1.0, 0.1, 1.3256096292870001, -0.2795169613124104),
    (1.0, 0.14250578527976865, 1.2652577834730357, -0.280548504076158),
    (1.0, 0.20307898838203522, 1.2058606066780414, -0.28343832804980137),
    (1.0, 0.28939930713202944, 1.147463701485787, -0.28909740270771577),
    (1.0, 0.412410755222708, 1.0901322608592349, -0.298783021542415),
    (1.0, 0.5877091853083445, 1.0340328848232801, -0.31426067608563098),
    (1.0, 0.837519589684987, 0.97963204321973168, -0.338107996483265),
    (1.0, 1.1935138681524868, 0.92820245682689291, -0.37435980573942445),
    (1.0, 1.7008263102336436, 0.88335289533994847, -0.43007001440698934),
    (1.0, 2.423775889643368, 0.85713827000254799, -0.51956851640635296),
    (1.0, 3.4540208649579798, 0.90677500793748325, -0.67347792451644868),
    (1.0, 4.922179557335426, 1.3924047918424603, -0.67197284749444044),
    (1.0, 7.014390631061088, 0.76154571912220488, -0.10795164348887789),
    (1.0, 9.995912451384122, -0.16017968750965694, -0.71843613679322377),
    (1.0, 14.244753534723115, 0.076806979533044881, -0.10455776506107724),
    (1.0, 20.299597885824774, 0.0028836566595171556, -0.050267511390923295),
    (1.0, 28.928101375829904, -0.0020039572488378919, -0.034453084892291912),
    (1.0, 41.22421803215396, -0.00093664718497759388, -0.024194316995857985),
    (1.0, 58.746895632164986, -0.00046236215465069746, -0.017000146518319467),
    (1.0, 83.71772494810281, -0.00022798700061488974, -0.011937277807643493),
    (10.0, 0.1, 9.946945817804694, -0.39552152767846954),
    (10.0, 0.14868527740095464, 9.9222681227942294, -0.45452037637086551),
    (10.0, 0.22107311715798833, 9.9341569222412279, -0.51841744963427132),
    (10.0, 0.3287031775052924, 9.9922340075395902, -0.55121555700392203),
    (10.0, 0.4887332312994963, 10.039429044025592, -0.50210179544690012),
    (10.0, 0.7266743607083053, 9.9779458312651078, -0.47896688510797571),
    (10.0, 1.0804577890207574, 10.02356413848965, -0.50807495934919727),
    (10.0, 1.6064816608057344, 10.005298521186333, -0.52126645353483712),
    (10.0, 2.3886017137644693, 10.021320254826247, -0.49493081686396503),
    (10.0, 3.551499084114657, 10.02032531459397, -0.51687096744440488),
    (10.0, 5.280556265108242, 9.9737819714518992, -0.53284605593082797),
    (10.0, 7.851409731089678, 9.9899152006602776, -0.60197625152368892),
    (10.0, 11.673890338556234, 10.18519283272718, -0.93884146235271369),
    (10.0, 17.35735623336558, 11.303915381128594, -7.7233831596100882),
    (10.0, 25.807833265051503, 0.20468036334516457, 0.30190799407146538),
    (10.0, 38.372448481317676, 0.00039658257797820151, -0.025067301116724571),
    (10.0, 57.054181469985586, -6.1419191234448061e-5, -0.017526715620667395),
    (10.0, 84.83116798749212, -2.7721808291524452e-5, -0.011787989917967541),
    (10.0, 126.13145744467249, -1.2539864135911099e-5, -0.0079281966856079923),
    (10.0, 187.53890739147835, -5.6723126119666241e-6, -0.005332214810680745),
    (16.0, 0.1, 15.922563015069367, -0.46828553474664463),
    (16.0, 0.14951371151117476, 15.944921700031102, -0.52901506831082052),
    (16.0, 0.22354349929846792, 16.007856864060693, -0.54519222088403172),
    (16.0, 0.3342281826430963, 16.030495823018219, -0.4857057310164274),
    (16.0, 0.4997169607860412, 15.975092965646284, -0.49983086105174839),
    (16.0, 0.7471453751220519, 16.01265087338861, -0.48566898335027195),
    (16.0, 1.1170847807290691, 16.013514585063974, -0.49246009171185794),
    (16.0, 1.6701949163944996, 15.986350341647088, -0.49933541660703473),
    (16.0, 2.4971704089723783, 15.988799172511832, -0.50813561754328669),
    (16.0, 3.733612161213385, 15.999974918753794, -0.51720683114280155),
    (16.0, 5.582262115662717, 15.972018500627198, -0.49252121275958646),
    (16.0, 8.346247275409555, 15.923074166450615, -0.49873211703049438),
    (16.0, 12.478784073365125, 16.414888298818634, -0.4426647641288597),
    (16.0, 18.657493219553555, 14.13284591825112, -5.9218721937555441),
    (16.0, 27.895510587500294, 0.17508901209976708, 0.56317073497003976),
    (16.0, 41.707613224364394, 0.00084452853895020535, -0.023751904013636795),
    (16.0, 62.358600514472755, -3.2157255339652544e-5, -0.016036137679687606),
    (16.0, 93.23465807561473, -1.4365708832895131e-5, -0.010725586755975566),
    (16.0, 139.3985977036048, -6.4263944666889511e-6, -0.00717366180313776),
    (16.0, 208.42001722119076, -2.8747917707751393e-6, -0.0047980001906126912),
    (20.0, 0.1, 19.929728125161396, -0.50437708735692432),
    (20.0, 0.1498772235272403, 19.978367218087043, -0.54684920389355576),
    (20.0, 0.22463182132234355, 20.033930683874422, -0.51589678974687572),
    (20.0, 0.33667193695659986, 19.992254524541973, -0.47401575545346014),
    (20.0, 0.5045945515059327, 20.010384581830135, -0.51707535561727944),
    (20.0, 0.7562723038668224, 19.990512484550315, -0.51190895403293536),
    (20.0, 1.1334799313410875, 20.007054571187998, -0.51010737550861264),
    (20.0, 1.6988282503324916, 19.993514539382742, -0.50879061542845523),
    (20.0, 2.5461566140947336, 19.993583374415658, -0.49088816730159321),
    (20.0, 3.816108839860377, 19.989126665640828, -0.49112643024927979),
    (20.0, 5.719477975960314, 19.976925257599792, -0.49255909586755414),
    (20.0, 8.57219479062132, 19.934064426544074, -0.51306110859020215),
    (20.0, 12.847767547529964, 20.239441152549666, -0.19709910058477515),
    (20.0, 19.255877285471723, 15.272649479322963, -1.36691830577141),
    (20.0, 28.860174241277544, -0.5822307025720717, 0.527137943435985),
    (20.0, 43.25482785795057, -0.00086816652638114124, -0.023454142423655623),
    (20.0, 64.82913503498358, -2.3757495417804402e-5, -0.015425107643220402),
    (20.0, 97.1641076271588, -1.0585573526319153e-5, -0.010291844481447144),
    (20.0, 145.62686677660514, -4.7124256977324877e-6, -0.0068668582970583923),
    (20.0, 218.26150463448892, -2.0978472402188124e-6, -0.0045816580550868481),
    (100.0, 0.1, 100.00752885294753, -0.51468077121813477),
    (100.0, 0.15208556095197603, 99.993955579909531, -0.5094498170977766),
    (100.0, 0.23130017850077217, 100.00683232929242, -0.50355553962023385),
    (100.0, 0.3517741739558212, 100.00298173320477, -0.50448684399778773),
    (100.0, 0.5349977257448907, 100.00026784254965, -0.50387556690402773),
    (100.0, 0.8136542922794313, 100.00096076180474, -0.49722435271821606),
    (100.0, 1.2374506946230037, 100.00223368414743, -0.5008431285663468),
    (100.0, 1.881983830421519, 100.00065580472211, -0.49793471889885009),
    (100.0, 2.8622256655220526, 100.00075180986327, -0.50220122434043226),
    (100.0, 4.353031959120643, 99.996832259050779, -0.50059382812549778),
    (100.0, 6.620333073447421, 99.995056560026598, -0.50434886671599466),
    (100.0, 10.068570691641705, 99.975738715751701, -0.49928740478540896),
    (100.0, 15.31284221622954, 100.21344656247649, -0.55413388309942757),
    (100.0, 23.288621982243697, 106.4432880944464, -5.7437655834063941),
    (100.0, 35.41863137968053, -4.5385589902692888, -1.3908262747301854),
    (100.0, 53.86662421529973, 0.00061778150456238768, -0.018833093687062122),
    (100.0, 81.92335760373156, -2.9805842025707632e-6, -0.012206528996067985),
    (100.0, 124.59359796232845, -1.2883314899127131e-6, -0.0080260941559054518),
    (100.0, 189.488872371257, -5.5699550337549427e-7, -0.0052773546288341481),
    (100.0, 288.1852144874001, -2.4081067570165192e-7, -0.0034699906174806752),
    (10000.0, 0.1, 9999.9998617497472, -0.49990576048412066),
    (10000.0, 0.15627090102713434, 10000.000107120535, -0.50002553676926675),
    (10000.0, 0.24420594507832413, 10000.000063560148, -0.50003718096380961),
    (10000.0, 0.38162283073572595, 9999.9999635452936, -0.50003490729064232),
    (10000.0, 0.5963654361159746, 9999.9999715819115, -0.49997796691483467),
    (10000.0, 0.9319456404328327, 9999.9999728690966, -0.49999786966447309),
    (10000.0, 1.4563598493874852, 10000.000016629643, -0.49998464309063594),
    (10000.0, 2.2758666588352394, 9999.9999820087935, -0.49998765230464547),
    (10000.0, 3.5565173339379657, 9999.9999810494915, -0.50001850951377316),
    (10000.0, 5.557801682931075, 10000.000004654827, -0.50004587265877176),
    (10000.0, 8.685226767217626, 10000.000028398144, -0.49986195800590235),
    (10000.0, 13.572482125380834, 9999.9989755769217, -0.50017013818290762),
    (10000.0, 21.20984010907938, 10000.001700339249, -0.53021722568654822),
    (10000.0, 33.14480824487288, 10004.470388026233, -6.6048763640100928),
    (10000.0, 51.79569048797875, 1126.8168920463559, -1203.960491364042),
    (10000.0, 80.9415922187901, -0.00037680539924207031, -0.013650214389800862),
    (10000.0, 126.48815546601215, -1.2500361772215924e-8, -0.0079058785883224307),
    (10000.0, 197.66418023933966, -5.1188693280785113e-9, -0.0050590855601005334),
    (10000.0, 308.89159546791484, -2.0961280555449865e-9, -0.0032373817050099489),
    (10000.0, 482.7076794348014, -8.5834440061463264e-10, -0.0020716471740630868),
];
