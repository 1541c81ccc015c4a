"""Frozen high-precision reference values; regenerate with tests/oracle.py."""

GOLDEN = {
    "ex1.C.A|BC": "0.8",
    "ex1.C.01": "0.4",
    "ex1.C.02": "0.56568542494923801952067548968388",
    "ex1.C.12": "0.56568542494923801952067548968388",
    "ex1.Et.A|BC": "0.72192809488736234787031942948939",
    "ex1.Et.01": "0.25022491161107053615132899337138",
    "ex1.Et.02": "0.42871007160692343167425246821558",
    "ex1.T1.5.A|BC": "0.78006211240030283717078991702696",
    "ex1.T1.5.01": "0.21370893881624573275690989340057",
    "ex1.T1.5.02": "0.41056030222890850346107896589066",
    "ex1.T2.A|BC": "0.64",
    "ex1.T2.01": "0.16",
    "ex1.T2.02": "0.32",
    "ex1.T3.A|BC": "0.48",
    "ex1.T3.01": "0.12",
    "ex1.T3.02": "0.24",
    "ex1.st.thm.3": "0.15242200677747824633702174572314",
    "ex1.st.thm.2sqrt2": "0.1734108869054334675528977427144",
    "ex1.st.powersum.2sqrt2": "0.11098859418356110977449952962461",
    "ex1.t2.thm.4": "0.01441792",
    "dicke41.C.A|BCD": "0.86602540378443864676372317075294",
    "dicke41.C.pair": "0.5",
    "dicke41.Et.A|BCD": "0.81127812445913286390969579203914",
    "dicke41.Et.pair": "0.35457890266526988419991218017462",
    "dicke41.st.thm_mixed0.2sqrt2": "0.42607466950852786930332548954777",
    "dicke41.st.powersum.2sqrt2": "0.15977800106569795098874705858042",
    "dicke41.st.thm_mixed0.3": "0.39574871873393083720043849821828",
    "dicke41.st.powersum.3": "0.13373957219837923736157387139828",
    "dicke41.st.thm_mixed0.4": "0.24907974981372579631122947066741",
    "dicke41.st.powersum.4": "0.047421230753023945872625789993634",
    "dicke41.st.thm_mixed0.5": "0.15127264984210697140030146815951",
    "dicke41.st.powersum.5": "0.01681456796344378059890463921913",
    "dicke41.st.thm_mixed0.6": "0.09007974819300075837642489097592",
    "dicke41.st.powersum.6": "0.0059620910572684975454003064768463",
    "dicke42.C.pair": "0.33333333333333333333333333333333",
    "w4.T2.A|BCD": "0.75",
    "w4.T2.pair": "0.25",
    "w4.t2.thm_mixed0.4": "0.03125",
    "w4.t2.thm_mixed0.5": "0.01185755432004975633595399144736",
    "w4.t2.thm_mixed0.6": "0.00439453125",
    "w4.t2.thm_mixed0.7": "0.00160426460250621954199424893092",
    "w4.t2.thm_mixed0.8": "0.000579833984375",
    "h.0.1": "0.025266127727119876132507155589217",
    "f_q.0.1.0.75": "0.07456881042852216170528947022842",
    "f_q.0.1.1.5": "0.014526376953424121432476648016237",
    "f_q.0.1.2": "0.01",
    "f_q.0.1.3": "0.0075",
    "f_q.0.1.4.2": "0.0065526551662307715784915243180158",
    "h.0.5": "0.35457890266526988419991218017462",
    "f_q.0.5.0.75": "0.64799131745611053355355612078969",
    "f_q.0.5.1.5": "0.32576538582523285270407388794116",
    "f_q.0.5.2": "0.25",
    "f_q.0.5.3": "0.1875",
    "f_q.0.5.4.2": "0.15789494449148961915492017178977",
    "h.0.9": "0.8582358753015158079624141150576",
    "f_q.0.9.0.75": "1.3359041478880847910534271783534",
    "f_q.0.9.1.5": "0.96750927454015121104969923835448",
    "f_q.0.9.2": "0.81",
    "f_q.0.9.3": "0.6075",
    "f_q.0.9.4.2": "0.46652475812146689814913045872691",
    "h.1": "1.0",
    "f_q.1.0.75": "1.5136569200217685337399997644838",
    "f_q.1.1.5": "1.1715728752538099023966225515806",
    "f_q.1.2": "1.0",
    "f_q.1.3": "0.75",
    "f_q.1.4.2": "0.55698823724249030162997890488439",
    "tau.W3": "0.027623164075731964495845819587814",
    "tau.W4": "0.051615457899377865388869871433522",
    "tau.W5": "0.066923860576930559451846888333279",
    "tau.W6": "0.075874505802246243986770881644703",
    "tau.W7": "0.080725954062032669425571118941204",
    "tau.W8": "0.082991555504163612392953862729683",
    "tau.W9": "0.083625912942028050419715356000646",
    "tau.W10": "0.083229051348520659670483958875563",
    "omega.W3.0.75": "0.2694822184448937698506298817971",
    "omega.W3.1.5": "0.48727277016828711109750373102842",
    "omega.W3.2": "0.39506172839506172839506172839506",
    "omega.W3.3": "0.22222222222222222222222222222222",
    "omega.W3.4.2": "0.10686838684741751260677172415028",
    "omega.W5.0.75": "0.3962714540830471193722733316411",
    "omega.W5.1.5": "0.42581085708255924914520274739761",
    "omega.W5.2": "0.3072",
    "omega.W5.3": "0.1728",
    "omega.W5.4.2": "0.10197630107564096049902981596452",
    "omega.W7.0.75": "0.38170040071070303758132838491657",
    "omega.W7.1.5": "0.29607567215834786465989705967072",
    "omega.W7.2": "0.19991670137442732194918783840067",
    "omega.W7.3": "0.11245314452311536859641815910037",
    "omega.W7.4.2": "0.07182914237882734977433868181314",
    "omega.W10.0.75": "0.32436966124196870149145031167305",
    "omega.W10.1.5": "0.18136597556943440138304924581867",
    "omega.W10.2": "0.1152",
    "omega.W10.3": "0.0648",
    "omega.W10.4.2": "0.043801914870600868402223777034586",
}
